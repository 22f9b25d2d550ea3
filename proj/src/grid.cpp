#include "idcopt/grid.hpp"

#include "idcopt/errors.hpp"

namespace idcopt {

Symmetry parse_symmetry(std::string_view name) {
  if (name == "mirror") return Symmetry::mirror;
  if (name == "antisym") return Symmetry::antisym;
  throw ConfigError("symmetry", "unknown symmetry '" + std::string(name) +
                                    "' (expected mirror or antisym)");
}

std::string_view to_string(Symmetry s) {
  return s == Symmetry::mirror ? "mirror" : "antisym";
}

bool CellGrid::satisfies(Symmetry s) const {
  const std::size_t R = rows();
  const std::size_t C = cols();
  for (std::size_t r = 0; r < R / 2; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      const std::size_t image_col = s == Symmetry::mirror ? c : C - 1 - c;
      if (at(R - 1 - r, image_col) != at(r, c)) return false;
    }
  }
  return true;
}

CellGrid expand_genome(const Genome& g, Symmetry symmetry, GridShape shape) {
  if (g.size() != shape.free_cells()) {
    throw EncodingError("genome length " + std::to_string(g.size()) + " does not match " +
                        std::to_string(shape.free_cells()) + " free cells");
  }
  CellGrid grid(shape);
  const std::size_t R = shape.rows;
  const std::size_t C = shape.cols;
  for (std::size_t i = 0; i < g.size(); ++i) grid.set(i / C, i % C, g[i]);
  for (std::size_t r = 0; r < R / 2; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      const std::size_t image_col = symmetry == Symmetry::mirror ? c : C - 1 - c;
      grid.set(R - 1 - r, image_col, grid.at(r, c));
    }
  }
  return grid;
}

}  // namespace idcopt
