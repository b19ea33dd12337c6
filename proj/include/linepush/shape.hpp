#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linepush/config.hpp"
#include "linepush/geometry.hpp"

namespace linepush {

// A shape is given as its path order: consecutive cells are Moore-adjacent
// and all cells are distinct. Files hold one "x y" pair per line; blank
// lines and lines starting with '#' are skipped.
std::vector<Coord> read_shape(const std::string& path);
std::vector<Coord> parse_shape(const std::string& text);
std::string serialize_shape(const std::vector<Coord>& cells);
void write_shape(const std::string& path, const std::vector<Coord>& cells);

// Built-in generators. Each returns the path order with the anchor agent
// (the one that never moves) last.
std::vector<Coord> gen_diagonal(int n);
std::vector<Coord> gen_staircase(int n, int run = 2);
std::vector<Coord> gen_spiral(int n);
// Seeded self-avoiding king walk; regenerates until the produced path admits
// a free straight ray next to its anchor. Throws GenerationFailed if no
// attempt works.
std::vector<Coord> gen_random(int n, uint64_t seed);

struct GenerationFailed : SimError {
    using SimError::SimError;
};

}  // namespace linepush
