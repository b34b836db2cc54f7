#pragma once

#include <vector>

#include "matchstick/planar.hpp"

namespace matchstick {

// Area measured in units of a unit equilateral triangle (sqrt(3)/4).
struct AreaUnits {
  enum class Provenance { max_bound, min_bound };
  double value = 0.0;
  Provenance provenance = Provenance::max_bound;
};

// Relative slack applied before an area rejection; counts are at most
// half-integral so real gaps dwarf this.
inline constexpr double kAreaRejectMargin = 1e-9;

// Capacity of an equilateral k-gon: k*cot(pi/k)/sqrt(3). Throws for k < 3.
AreaUnits max_area_units(int k);

// Lower bound on the area of an inner equilateral s-gon: 1 for odd s
// (including the triangle itself), 0 for even s where no positive bound
// exists. Throws for s < 3. Outer faces bound no inner area.
AreaUnits min_area_units(int s, bool is_inner);

// Inner degree-4 vertex whose four faces are all inner triangles or
// quadrangles in pattern {3,3,4,4} or {3,4,4,4}; the quadrangles around it
// jointly cover area > 2 units.
struct ConfigurationCenter {
  int vertex = 0;
  std::vector<int> profile;     // fs(vertex), sorted
  std::vector<int> quad_faces;  // incident quadrangle face ids
};

std::vector<ConfigurationCenter> find_configuration_centers(
    const FaceSet& fs, const std::vector<VertexFaceProfile>& profiles,
    const OuterFaceChoice& outer);

}  // namespace matchstick
