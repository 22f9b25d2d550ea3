#pragma once

#include <cstddef>

#include "idcopt/genome.hpp"
#include "idcopt/objective.hpp"
#include "idcopt/parallel.hpp"

namespace idcopt {

/// Largest dimension the exhaustive search will accept (2^20 genomes).
inline constexpr std::size_t kOracleMaxDimension = 20;

struct OracleResult {
  Genome best;
  double best_cost = 0.0;
  std::size_t evaluated = 0;
  /// How many genomes attain best_cost.
  std::size_t optima = 0;
};

/// Enumerates all 2^D genomes (bit i of the index is gene i). Ties resolve
/// to the lowest index, so serial and parallel runs agree exactly.
/// Throws DomainError when D > kOracleMaxDimension or D == 0.
/// Objectives that are not concurrent_safe() always run serially.
OracleResult oracle_bruteforce(const Objective& objective, Exec exec = Exec::serial);

}  // namespace idcopt
