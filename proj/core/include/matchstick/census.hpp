#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchstick/planar.hpp"

namespace matchstick {

// Face census for one choice of outer face. A counts every face including
// the outer one; inner_A differs from A by one decrement at i = k.
struct FaceCensus {
  int n = 0;
  int edge_count = 0;
  int face_count = 0;
  int k = 0;
  std::map<int, int> A;
  std::map<int, int> inner_A;
  std::optional<int> r;
  int interior_vertex_count = 0;

  int inner_count(int i) const {
    auto it = inner_A.find(i);
    return it == inner_A.end() ? 0 : it->second;
  }
};

struct IdentityResult {
  std::string name;
  bool applicable = true;
  bool holds = true;
};

FaceCensus face_census(const FaceSet& fs, const OuterFaceChoice& outer,
                       std::optional<int> r);

// Evaluates the Euler-derived identities for r-regular embeddings in exact
// integer arithmetic. Throws std::invalid_argument when census.r is absent.
// A failed identity means corrupted input data, never a criterion rejection.
std::vector<IdentityResult> lemma1_check(const FaceCensus& census);

// Minimum admissible A_3 for a 4-regular matchstick graph with outer face
// size k; diagnostic cross-check, implied by the identities.
// Throws std::invalid_argument unless r = 4.
int triangle_lower_bound_4regular(const FaceCensus& census);

}  // namespace matchstick
