#pragma once

#include <string>

#include "mlab/errors.hpp"

namespace mlab {

// Renders a grid CSV produced by a map command into a standalone SVG 1.1
// document: one rect per cell, discrete swatch legend for classification
// maps, linear ramp with min/max legend for scalar maps. Byte-deterministic
// for identical input.
// scalar_column: when non-empty, forces a ramp over the named column.
std::string render_heatmap(const std::string& csv_text,
                           const std::string& scalar_column = "");

}  // namespace mlab
