#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idcopt/genome.hpp"

namespace idcopt {

/// How the lower half of the grid is generated from the upper half.
///   mirror:  grid[R-1-r][c]     = grid[r][c]
///   antisym: grid[R-1-r][C-1-c] = grid[r][c]   (point reflection)
enum class Symmetry { mirror, antisym };

Symmetry parse_symmetry(std::string_view name);
std::string_view to_string(Symmetry s);

/// Grid dimensions. Rows 0..ceil(R/2)-1 are free; the rest are images.
struct GridShape {
  std::size_t rows = 11;
  std::size_t cols = 16;

  std::size_t free_rows() const noexcept { return rows - rows / 2; }
  std::size_t free_cells() const noexcept { return free_rows() * cols; }

  static GridShape full() { return {11, 16}; }
  /// 3 x 4 grid with 8 free cells, small enough for exhaustive checks.
  static GridShape reduced() { return {3, 4}; }

  bool operator==(const GridShape&) const = default;
};

/// Row-major binary metallization pattern (1 = metal).
class CellGrid {
 public:
  explicit CellGrid(GridShape shape) : shape_(shape), cells_(shape.rows * shape.cols, 0) {}

  const GridShape& shape() const noexcept { return shape_; }
  std::size_t rows() const noexcept { return shape_.rows; }
  std::size_t cols() const noexcept { return shape_.cols; }
  bool at(std::size_t r, std::size_t c) const { return cells_[r * shape_.cols + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { cells_[r * shape_.cols + c] = v ? 1 : 0; }

  bool satisfies(Symmetry s) const;
  bool operator==(const CellGrid&) const = default;

 private:
  GridShape shape_;
  std::vector<std::uint8_t> cells_;
};

/// Throws EncodingError if g.size() != shape.free_cells().
CellGrid expand_genome(const Genome& g, Symmetry symmetry, GridShape shape = GridShape::full());

}  // namespace idcopt
