#include "idcopt/genome.hpp"

#include <algorithm>

#include "idcopt/errors.hpp"

namespace idcopt {

Genome::Genome(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw EncodingError("genome bit " + std::to_string(i) + " is not 0 or 1");
    }
  }
}

Genome Genome::ones(std::size_t dimension) {
  Genome g(dimension);
  std::fill(g.bits_.begin(), g.bits_.end(), std::uint8_t{1});
  return g;
}

Genome Genome::random(std::size_t dimension, RngStream& rng) {
  Genome g(dimension);
  for (auto& b : g.bits_) b = rng.coin() ? 1 : 0;
  return g;
}

Genome Genome::from_text(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  Genome g(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      g.bits_[i] = 1;
    } else if (text[i] != '0') {
      throw EncodingError("genome text has invalid character at position " +
                          std::to_string(i));
    }
  }
  return g;
}

Genome Genome::from_index(std::uint64_t index, std::size_t dimension) {
  Genome g(dimension);
  for (std::size_t i = 0; i < dimension && i < 64; ++i) g.bits_[i] = (index >> i) & 1U;
  return g;
}

std::size_t Genome::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string Genome::to_text() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

std::size_t hamming_distance(const Genome& a, const Genome& b) {
  if (a.size() != b.size()) throw EncodingError("hamming_distance: length mismatch");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += (a[i] != b[i]);
  return n;
}

Genome binarize(std::span<const double> position) {
  Genome g(position.size());
  for (std::size_t i = 0; i < position.size(); ++i) g.set(i, position[i] >= 0.5);
  return g;
}

}  // namespace idcopt
