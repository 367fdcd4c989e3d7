#pragma once

#include <cstdint>
#include <string>

#include "pp/oracle.hpp"

namespace pp::render {

// Rows top to bottom, '#' for a cell, '.' for empty space.
std::string to_ascii(const oracle::Cells& cells);

// Standalone SVG, 10 units per cell, one-cell margin, y pointing up.
std::string to_svg(const oracle::Cells& cells);

// One polygon as a JSON object with class, half-perimeter, sorted cells,
// walk endpoint, seed/index provenance and the generator id.
std::string to_json(const char* class_name, const oracle::Cells& cells,
                    int half_perimeter, uint64_t seed, uint64_t index);

}  // namespace pp::render
