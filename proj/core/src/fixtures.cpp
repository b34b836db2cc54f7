#include "matchstick/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace matchstick {

namespace {

// Rotation systems transcribed from plane drawings (clockwise neighbor
// order), vertices numbered by sorted drawing coordinates.
constexpr std::array<std::pair<const char*, const char*>, 8> kFixtures = {{
    {"octahedron",
     "graph octahedron 6\n"
     "1: 3 6 4 2\n"
     "2: 1 4 5 3\n"
     "3: 2 5 6 1\n"
     "4: 6 5 2 1\n"
     "5: 6 3 2 4\n"
     "6: 3 5 4 1\n"},
    {"square",
     "graph square 4\n"
     "1: 4 2\n"
     "2: 1 3\n"
     "3: 4 2\n"
     "4: 3 1\n"},
    {"fig1_left",
     "graph fig1_left 7\n"
     "1: 6 5 2\n"
     "2: 1 5 7\n"
     "3: 4 5 6\n"
     "4: 3 7 5\n"
     "5: 3 4 2 1\n"
     "6: 3 1\n"
     "7: 4 2\n"},
    {"fig3_strip",
     "graph fig3_strip 7\n"
     "1: 5 2\n"
     "2: 1 5 6 3\n"
     "3: 2 6 7 4\n"
     "4: 3 7\n"
     "5: 6 2 1\n"
     "6: 5 7 3 2\n"
     "7: 6 4 3\n"},
    {"fig2",
     "graph fig2 13\n"
     "1: 4 3 2\n"
     "2: 1 3 6 5\n"
     "3: 1 4 7 2\n"
     "4: 9 8 3 1\n"
     "5: 2 6 10\n"
     "6: 2 7 10 5\n"
     "7: 3 8 11 6\n"
     "8: 4 9 12 7\n"
     "9: 12 8 4\n"
     "10: 6 11 13 5\n"
     "11: 7 12 13 10\n"
     "12: 8 9 13 11\n"
     "13: 11 12 10\n"},
    {"fig4_left",
     "graph fig4_left 10\n"
     "1: 5 4 3 2\n"
     "2: 1 3 6\n"
     "3: 1 4 7 2\n"
     "4: 5 8 3 1\n"
     "5: 9 4 1\n"
     "6: 2 7 10\n"
     "7: 3 8 10 6\n"
     "8: 4 9 10 7\n"
     "9: 5 10 8\n"
     "10: 8 9 6 7\n"},
    {"fig4_right",
     "graph fig4_right 11\n"
     "1: 2 5 4 3\n"
     "2: 6 5 1\n"
     "3: 1 4 7\n"
     "4: 1 5 8 3\n"
     "5: 2 6 4 1\n"
     "6: 11 9 5 2\n"
     "7: 3 8 10\n"
     "8: 4 9 10 7\n"
     "9: 6 11 10 8\n"
     "10: 8 9 11 7\n"
     "11: 9 6 10\n"},
    {"fig5",
     "graph fig5 14\n"
     "1: 2 3 4\n"
     "2: 5 3 1\n"
     "3: 2 5 4 1\n"
     "4: 1 3 7 6\n"
     "5: 2 9 8 3\n"
     "6: 4 7 10 12\n"
     "7: 4 8 10 6\n"
     "8: 5 9 11 7\n"
     "9: 13 11 8 5\n"
     "10: 7 11 12 6\n"
     "11: 8 9 13 10\n"
     "12: 10 13 14 6\n"
     "13: 11 9 14 12\n"
     "14: 13 12\n"},
}};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : kFixtures) names.emplace_back(name);
  return names;
}

std::string fixture_text(const std::string& name) {
  for (const auto& [fname, text] : kFixtures) {
    if (name == fname) return text;
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

std::string all_fixtures_text() {
  std::string out;
  for (const auto& [name, text] : kFixtures) {
    out += text;
    out += "\n";
  }
  return out;
}

}  // namespace matchstick
