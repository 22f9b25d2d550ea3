#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idcopt/bpso.hpp"
#include "idcopt/classic.hpp"
#include "idcopt/evaluator.hpp"
#include "idcopt/rlbpso.hpp"

namespace idcopt {

/// Hyperparameters for every optimizer; defaults follow the comparison setup
/// (25 iterations for the population methods, 100 for SA).
struct AlgorithmConfig {
  BpsoParams bpso;
  RlbpsoParams rlbpso;
  AbcParams abc;
  AcoParams aco;
  SaParams sa;
  AloParams alo;
};

/// Registry keys in report order: bpso, sa, sa_swap, abc, aco, alo, rlbpso.
std::span<const std::string_view> algorithm_names();
bool is_algorithm(std::string_view name);
/// Row label used in reports, e.g. "SA with Swap Mutation".
std::string display_name(std::string_view name);

/// Throws ConfigError for an unknown name.
RunRecord run_algorithm(std::string_view name, const AlgorithmConfig& config,
                        Evaluator& evaluator, std::uint64_t seed);

/// Objective calls a full run issues with the cache off, from the iteration
/// caps alone (SA includes its temperature calibration; ABC excludes scouts).
std::size_t nominal_evaluations(std::string_view name, const AlgorithmConfig& config);

/// Raises each iteration cap so the nominal evaluation count fills `budget`,
/// and stretches SA's cooling so T reaches T_end on the last iteration.
AlgorithmConfig scale_to_budget(AlgorithmConfig config, std::size_t budget);

/// Population-size knob used by the complexity probe.
void set_population(AlgorithmConfig& config, std::string_view name, std::size_t n);

}  // namespace idcopt
