#include "matchstick/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "matchstick/planar.hpp"

namespace matchstick {

namespace {

using Point = std::pair<int, int>;  // lattice coordinates

struct Shape {
  std::vector<Point> points;                 // sorted, ids by position
  std::vector<std::pair<int, int>> edges;    // index pairs
  std::vector<std::pair<double, double>> xy; // drawing position per point
};

constexpr double kSqrt3Half = 0.8660254037844386;

// Random edge-connected cell growth on the square lattice; cells are (x,y).
std::set<Point> grow_square(std::mt19937_64& rng, int cells) {
  std::set<Point> region{{0, 0}};
  while (static_cast<int>(region.size()) < cells) {
    std::set<Point> frontier;
    for (const auto& [x, y] : region) {
      for (Point c : {Point{x + 1, y}, Point{x - 1, y}, Point{x, y + 1}, Point{x, y - 1}})
        if (!region.count(c)) frontier.insert(c);
    }
    auto it = frontier.begin();
    std::advance(it, rng() % frontier.size());
    region.insert(*it);
  }
  return region;
}

// Triangular cells: (a, b, up?) with up = (a,b),(a+1,b),(a,b+1) and
// down = (a+1,b),(a,b+1),(a+1,b+1).
using TriCell = std::tuple<int, int, int>;

std::set<TriCell> grow_tri(std::mt19937_64& rng, int cells) {
  std::set<TriCell> region{{0, 0, 1}};
  while (static_cast<int>(region.size()) < cells) {
    std::set<TriCell> frontier;
    for (const auto& [a, b, up] : region) {
      std::vector<TriCell> nbrs;
      if (up)
        nbrs = {{a, b, 0}, {a - 1, b, 0}, {a, b - 1, 0}};
      else
        nbrs = {{a, b, 1}, {a + 1, b, 1}, {a, b + 1, 1}};
      for (const TriCell& c : nbrs)
        if (!region.count(c)) frontier.insert(c);
    }
    auto it = frontier.begin();
    std::advance(it, rng() % frontier.size());
    region.insert(*it);
  }
  return region;
}

PlanarEmbedding shape_to_embedding(const std::set<Point>& points,
                                   const std::set<std::pair<Point, Point>>& edges,
                                   bool triangular, const std::string& name) {
  std::map<Point, int> id;
  std::vector<std::pair<double, double>> xy;
  for (const Point& p : points) {
    id[p] = static_cast<int>(xy.size());
    if (triangular)
      xy.emplace_back(p.first + 0.5 * p.second, kSqrt3Half * p.second);
    else
      xy.emplace_back(p.first, p.second);
  }

  PlanarEmbedding g;
  g.name = name;
  g.vertex_count = static_cast<int>(points.size());
  g.rotation.resize(g.vertex_count);
  for (const auto& [a, b] : edges) {
    g.rotation[id.at(a)].push_back(id.at(b));
    g.rotation[id.at(b)].push_back(id.at(a));
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    std::sort(g.rotation[v].begin(), g.rotation[v].end(), [&](int u, int w) {
      double au = std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first);
      double aw = std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
      return au > aw;  // clockwise
    });
  }
  return g;
}

void add_edge(std::set<std::pair<Point, Point>>& edges, Point a, Point b) {
  if (b < a) std::swap(a, b);
  edges.insert({a, b});
}

}  // namespace

std::string generate_lattice_corpus(std::uint64_t seed, int count, int size) {
  if (count < 0 || size < 1) throw std::invalid_argument("bad corpus parameters");
  std::mt19937_64 rng(seed);
  std::string out;

  for (int i = 0; i < count; ++i) {
    bool triangular = i % 2 == 1;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw std::logic_error("lattice generation did not converge");
      int lo = (size + 1) / 2;
      int cells = lo + static_cast<int>(rng() % (size - lo + 1));

      std::set<Point> points;
      std::set<std::pair<Point, Point>> edges;
      if (triangular) {
        for (const auto& [a, b, up] : grow_tri(rng, cells)) {
          std::vector<Point> corner = up
              ? std::vector<Point>{{a, b}, {a + 1, b}, {a, b + 1}}
              : std::vector<Point>{{a + 1, b}, {a, b + 1}, {a + 1, b + 1}};
          for (const Point& p : corner) points.insert(p);
          add_edge(edges, corner[0], corner[1]);
          add_edge(edges, corner[1], corner[2]);
          add_edge(edges, corner[2], corner[0]);
        }
      } else {
        for (const auto& [x, y] : grow_square(rng, cells)) {
          std::vector<Point> corner{{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
          for (const Point& p : corner) points.insert(p);
          for (int j = 0; j < 4; ++j) add_edge(edges, corner[j], corner[(j + 1) % 4]);
        }
      }

      PlanarEmbedding g = shape_to_embedding(
          points, edges, triangular,
          (triangular ? "tri" : "sq") + std::to_string(i));
      g.validate();
      if (!connectivity(g, 2)) continue;  // corner-touching growth, regrow
      out += serialize_rotation_text(g);
      out += "\n";
      break;
    }
  }
  return out;
}

}  // namespace matchstick
