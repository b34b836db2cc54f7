#include "matchstick/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace matchstick {

AreaUnits max_area_units(int k) {
  if (k < 3) throw std::invalid_argument("max_area_units requires k >= 3");
  double kk = static_cast<double>(k);
  double cot = 1.0 / std::tan(std::numbers::pi / kk);
  return {kk * cot / std::sqrt(3.0), AreaUnits::Provenance::max_bound};
}

AreaUnits min_area_units(int s, bool is_inner) {
  if (s < 3) throw std::invalid_argument("min_area_units requires s >= 3");
  if (!is_inner) return {0.0, AreaUnits::Provenance::min_bound};
  // odd s-gons cover at least one triangle unit; even s-gons have area
  // infimum 0 (chains of near-degenerate rhombi), so no positive bound
  return {s % 2 == 1 ? 1.0 : 0.0, AreaUnits::Provenance::min_bound};
}

std::vector<ConfigurationCenter> find_configuration_centers(
    const FaceSet& fs, const std::vector<VertexFaceProfile>& profiles,
    const OuterFaceChoice& outer) {
  static const std::vector<int> pattern_a = {3, 3, 4, 4};
  static const std::vector<int> pattern_b = {3, 4, 4, 4};

  std::vector<ConfigurationCenter> out;
  for (const auto& p : profiles) {
    if (!outer.is_interior(p.vertex)) continue;
    if (p.fs != pattern_a && p.fs != pattern_b) continue;
    ConfigurationCenter c;
    c.vertex = p.vertex;
    c.profile = p.fs;
    bool all_inner = true;
    for (int f : fs.incident_faces(p.vertex)) {
      if (f == outer.outer_face) {
        all_inner = false;
        break;
      }
      if (fs.face_size(f) == 4) c.quad_faces.push_back(f);
    }
    if (!all_inner) continue;
    std::sort(c.quad_faces.begin(), c.quad_faces.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace matchstick
