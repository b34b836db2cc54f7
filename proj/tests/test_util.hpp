#pragma once

// Shared helpers for the test suite: fixture loading, small graph builders,
// and independent brute-force oracles that double-check the library solvers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "matchstick/criteria.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/planar.hpp"

namespace testutil {

inline matchstick::PlanarEmbedding fixture(const std::string& name) {
  auto gs = matchstick::parse_rotation_text(matchstick::fixture_text(name));
  if (gs.size() != 1) throw std::runtime_error("fixture is not a single graph");
  return gs[0];
}

// All structures derived from one embedding for a given outer face.
struct Derived {
  matchstick::FaceSet fs;
  matchstick::OuterFaceChoice outer;
  std::vector<matchstick::VertexFaceProfile> profiles;
};

inline Derived derive(const matchstick::PlanarEmbedding& g, int outer_face) {
  Derived d;
  d.fs = matchstick::trace_faces(g);
  d.outer = matchstick::choose_outer_face(d.fs, outer_face, g.vertex_count);
  d.profiles = matchstick::vertex_face_profiles(d.fs, g.vertex_count);
  return d;
}

// Face id of the unique largest face; used as "the depicted outer face"
// for the figure fixtures (each has one distinguished big face).
inline int largest_face(const matchstick::FaceSet& fs) {
  int best = 0;
  for (int f = 1; f < fs.face_count(); ++f)
    if (fs.face_size(f) > fs.face_size(best)) best = f;
  return best;
}

// Cycle C_n with rotation [prev, next] per vertex: two faces of size n.
inline matchstick::PlanarEmbedding make_cycle(int n) {
  matchstick::PlanarEmbedding g;
  g.vertex_count = n;
  g.rotation.resize(n);
  for (int v = 0; v < n; ++v)
    g.rotation[v] = {(v + n - 1) % n, (v + 1) % n};
  return g;
}

// Relabels vertices by the permutation perm (old id -> new id), preserving
// each rotation's cyclic order.
inline matchstick::PlanarEmbedding relabel(const matchstick::PlanarEmbedding& g,
                                           const std::vector<int>& perm) {
  matchstick::PlanarEmbedding out;
  out.vertex_count = g.vertex_count;
  out.name = g.name;
  out.rotation.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    auto& r = out.rotation[perm[v]];
    for (int u : g.rotation[v]) r.push_back(perm[u]);
  }
  return out;
}

// Exhaustive maximum independent set on <= 30 vertices via choose/skip
// recursion over adjacency bitmasks; independent of the library solver.
inline int brute_force_mis(int n, const std::vector<std::uint32_t>& adj) {
  int best = 0;
  // explicit stack of (next vertex to decide, chosen count, forbidden mask)
  struct Frame { int v; int count; std::uint32_t banned; };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    auto [v, count, banned] = stack.back();
    stack.pop_back();
    if (v == n) {
      best = std::max(best, count);
      continue;
    }
    stack.push_back({v + 1, count, banned});  // skip v
    if (!(banned >> v & 1))
      stack.push_back({v + 1, count + 1, banned | adj[v]});  // take v
  }
  return best;
}

}  // namespace testutil
