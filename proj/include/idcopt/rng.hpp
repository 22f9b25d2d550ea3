#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace idcopt {

/// Portable pseudorandom stream: xoshiro256** seeded through splitmix64.
///
/// Every draw is defined in terms of 64-bit integer arithmetic, so an identical
/// seed yields an identical sequence on every platform. Doubles are built from
/// the top 53 bits. Child streams are derived from a parent's seed and a fixed
/// text label, never from the parent's draw position, so adding or removing
/// draws in one component cannot perturb another.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draws() const noexcept { return draws_; }

  /// Independent stream keyed by (seed, label).
  RngStream derive(std::string_view label) const;

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (next_u64() >> 63) != 0; }
  /// Standard normal via Box-Muller (two uniforms per call, no caching).
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::array<std::uint64_t, 4> state_{};
};

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t fnv1a64(std::string_view text);

}  // namespace idcopt
