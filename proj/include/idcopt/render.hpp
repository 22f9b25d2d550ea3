#pragma once

#include <string>

#include "idcopt/genome.hpp"
#include "idcopt/grid.hpp"

namespace idcopt {

/// One line per grid row, '#' for metal and '.' for empty, each ending in '\n'.
/// Throws EncodingError on a length mismatch.
std::string render_text(const Genome& g, Symmetry symmetry, GridShape shape = GridShape::full());

/// Standalone SVG drawing each cell as a cell_mm square (user units are mm).
std::string render_svg(const Genome& g, Symmetry symmetry, GridShape shape = GridShape::full(),
                       double cell_mm = 1.5);

}  // namespace idcopt
