#include "idcopt/render.hpp"

#include <cstdio>

namespace idcopt {

std::string render_text(const Genome& g, Symmetry symmetry, GridShape shape) {
  const CellGrid grid = expand_genome(g, symmetry, shape);
  std::string out;
  out.reserve(shape.rows * (shape.cols + 1));
  for (std::size_t r = 0; r < shape.rows; ++r) {
    for (std::size_t c = 0; c < shape.cols; ++c) out += grid.at(r, c) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string render_svg(const Genome& g, Symmetry symmetry, GridShape shape, double cell_mm) {
  const CellGrid grid = expand_genome(g, symmetry, shape);
  const double w = cell_mm * static_cast<double>(shape.cols);
  const double h = cell_mm * static_cast<double>(shape.rows);
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%gmm\" height=\"%gmm\" "
                "viewBox=\"0 0 %g %g\">\n",
                w, h, w, h);
  out += buf;
  std::snprintf(buf, sizeof buf,
                "  <rect x=\"0\" y=\"0\" width=\"%g\" height=\"%g\" fill=\"white\" "
                "stroke=\"black\" stroke-width=\"0.05\"/>\n",
                w, h);
  out += buf;
  for (std::size_t r = 0; r < shape.rows; ++r) {
    for (std::size_t c = 0; c < shape.cols; ++c) {
      if (!grid.at(r, c)) continue;
      std::snprintf(buf, sizeof buf,
                    "  <rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"#b87333\"/>\n",
                    cell_mm * static_cast<double>(c), cell_mm * static_cast<double>(r), cell_mm,
                    cell_mm);
      out += buf;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace idcopt
