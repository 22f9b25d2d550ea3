#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idcopt/rng.hpp"

namespace idcopt {

inline constexpr std::size_t kDefaultDimension = 96;

/// Binary candidate design. Bit i maps to free cell (i / cols, i % cols).
class Genome {
 public:
  Genome() = default;
  /// All-zero genome of the given length.
  explicit Genome(std::size_t dimension) : bits_(dimension, 0) {}
  /// Throws EncodingError if any value is not 0 or 1.
  explicit Genome(std::vector<std::uint8_t> bits);

  static Genome zeros(std::size_t dimension) { return Genome(dimension); }
  static Genome ones(std::size_t dimension);
  static Genome random(std::size_t dimension, RngStream& rng);
  /// Parses the text form; a single trailing '\n' is accepted.
  static Genome from_text(std::string_view text);
  /// Genome whose bits are the low `dimension` bits of `index`, bit 0 first.
  static Genome from_index(std::uint64_t index, std::size_t dimension);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  std::size_t count_ones() const noexcept;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  /// D characters of '0'/'1', no newline. This is the cache key.
  std::string to_text() const;

  bool operator==(const Genome&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const Genome& a, const Genome& b);

/// Threshold continuous coordinates at 0.5 (>= 0.5 becomes 1).
Genome binarize(std::span<const double> position);

}  // namespace idcopt
