#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idcopt {

struct ProbeRow {
  std::size_t population = 0;
  std::size_t evaluations = 0;
  /// nominal_evaluations() for the same settings.
  std::size_t closed_form = 0;
};

/// Runs `algorithm` once per population size on a constant-cost objective
/// with caching off and an effectively unlimited budget, and counts
/// objective calls. Every iteration cap is set to max_iter; ABC scouts are
/// disabled so counts depend on the population alone.
std::vector<ProbeRow> eval_count_probe(std::string_view algorithm,
                                       std::span<const std::size_t> populations,
                                       std::size_t max_iter, std::size_t dimension = 96,
                                       std::uint64_t seed = 42);

std::string format_probe(std::string_view algorithm, const std::vector<ProbeRow>& rows);

}  // namespace idcopt
