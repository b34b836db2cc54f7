#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace matchstick {

// Conflict model for face-disjoint center configurations: pick a maximum
// subset of eligible vertices no two of which conflict.
struct ConflictBLP {
  std::vector<int> eligible_vertices;
  std::vector<std::pair<int, int>> conflicts;  // symmetric after closure
};

struct BLPOutcome {
  int optimum = 0;
  std::vector<int> chosen_set;  // sorted; lexicographically smallest optimum
  std::int64_t node_count = 0;
};

// Exact maximum independent set by branch and bound with a greedy
// clique-cover upper bound. Deterministic: lowest ids preferred.
BLPOutcome max_disjoint_configurations(const ConflictBLP& blp);

}  // namespace matchstick
