#pragma once

#include <string>
#include <vector>

namespace matchstick {

// Built-in rotation-text fixtures so tests and the CLI are self-contained.
// Names: octahedron, square, fig1_left, fig3_strip, fig2, fig4_left,
// fig4_right, fig5.
std::vector<std::string> fixture_names();
std::string fixture_text(const std::string& name);  // throws on unknown name
std::string all_fixtures_text();

}  // namespace matchstick
