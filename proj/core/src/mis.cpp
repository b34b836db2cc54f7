#include "matchstick/mis.hpp"

#include <algorithm>
#include <set>

namespace matchstick {

namespace {

struct Searcher {
  int n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<int> ids;       // sorted original ids
  std::vector<int> best;      // indices into ids
  std::vector<int> current;
  std::int64_t nodes = 0;

  // greedy clique cover of the candidates: number of cliques bounds the
  // independent set size from above
  int clique_cover_bound(const std::vector<int>& candidates) const {
    std::vector<std::vector<int>> cliques;
    for (int v : candidates) {
      bool placed = false;
      for (auto& clique : cliques) {
        bool fits = true;
        for (int u : clique) {
          if (!adj[v][u]) {
            fits = false;
            break;
          }
        }
        if (fits) {
          clique.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    return static_cast<int>(cliques.size());
  }

  void search(const std::vector<int>& candidates) {
    ++nodes;
    if (current.size() + candidates.size() <= best.size()) return;
    if (candidates.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + clique_cover_bound(candidates) <= best.size()) return;

    int v = candidates.front();
    std::vector<int> rest(candidates.begin() + 1, candidates.end());

    // include v first: depth-first inclusion in ascending id order makes the
    // first optimum found the lexicographically smallest one
    std::vector<int> compatible;
    for (int u : rest)
      if (!adj[v][u]) compatible.push_back(u);
    current.push_back(v);
    search(compatible);
    current.pop_back();

    search(rest);
  }
};

}  // namespace

BLPOutcome max_disjoint_configurations(const ConflictBLP& blp) {
  Searcher s;
  s.ids = blp.eligible_vertices;
  std::sort(s.ids.begin(), s.ids.end());
  s.ids.erase(std::unique(s.ids.begin(), s.ids.end()), s.ids.end());
  s.n = static_cast<int>(s.ids.size());
  s.adj.assign(s.n, std::vector<char>(s.n, 0));

  auto index_of = [&](int id) {
    auto it = std::lower_bound(s.ids.begin(), s.ids.end(), id);
    if (it == s.ids.end() || *it != id) return -1;
    return static_cast<int>(it - s.ids.begin());
  };
  for (const auto& [a, b] : blp.conflicts) {
    int i = index_of(a), j = index_of(b);
    if (i < 0 || j < 0 || i == j) continue;  // conflicts with ineligible vertices drop out
    s.adj[i][j] = s.adj[j][i] = 1;
  }

  std::vector<int> all(s.n);
  for (int i = 0; i < s.n; ++i) all[i] = i;
  s.search(all);

  BLPOutcome out;
  out.optimum = static_cast<int>(s.best.size());
  for (int i : s.best) out.chosen_set.push_back(s.ids[i]);
  std::sort(out.chosen_set.begin(), out.chosen_set.end());
  out.node_count = s.nodes;
  return out;
}

}  // namespace matchstick
