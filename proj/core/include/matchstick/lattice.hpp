#pragma once

#include <cstdint>
#include <string>

namespace matchstick {

// Deterministic corpus of genuine matchstick graphs: random edge-connected
// polyominoes (unit square lattice) and polyiamonds (unit triangular
// lattice) with their natural rotation systems, filtered to 2-connected.
// `size` caps the cell count per shape. Output is rotation-text; identical
// seeds give byte-identical output.
std::string generate_lattice_corpus(std::uint64_t seed, int count, int size);

}  // namespace matchstick
