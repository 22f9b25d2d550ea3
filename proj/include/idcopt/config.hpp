#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "idcopt/algorithms.hpp"
#include "idcopt/grid.hpp"
#include "idcopt/objective.hpp"

namespace idcopt {

/// Which cost function to optimize.
///   surrogate: profile (idc1500 | idc5000 | reduced) + symmetry
///   onemax:    dimension
///   trap:      dimension + block
///   external:  command (+ timeout, restarts), dimension
struct ObjectiveSpec {
  std::string kind = "surrogate";
  std::string profile = "idc1500";
  Symmetry symmetry = Symmetry::mirror;
  std::size_t dimension = 96;
  std::size_t block = 4;
  std::vector<std::string> command;
  double timeout_seconds = 30.0;
  int max_restarts = 3;

  /// Short form "kind[:arg[:arg]]", e.g. "surrogate:reduced", "trap:96:4",
  /// "external:python3 child.py". Throws ConfigError.
  static ObjectiveSpec parse(std::string_view text);
  std::string describe() const;
  /// Genome length this objective expects.
  std::size_t genome_length() const;
};

/// Throws ConfigError for invalid specs; ExternalObjective launches lazily.
std::unique_ptr<Objective> make_objective(const ObjectiveSpec& spec);

struct ExperimentConfig {
  std::vector<std::string> algorithms{"bpso"};
  ObjectiveSpec objective;
  std::vector<std::uint64_t> seeds{42};
  std::size_t budget = 650;
  /// Raise iteration caps so each optimizer can spend the whole budget.
  bool scale_iterations = false;
  AlgorithmConfig params;
  std::filesystem::path output_dir = "out";
  /// Run campaign cells and batch evaluations through the OpenMP kernels.
  bool parallel = false;
  int threads = 0;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parses the JSON schema documented in README.md; absent fields keep their
/// defaults. Unknown keys, bad values and conflicting fields raise
/// ConfigError; malformed JSON reports "<source>:<line>: ...".
ExperimentConfig parse_config(std::string_view json_text, std::string_view source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Expands "all" to every registered algorithm; validates the rest.
std::vector<std::string> expand_algorithms(const std::vector<std::string>& names);

/// "1,2,5-8" -> {1,2,5,6,7,8}. Throws ConfigError.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace idcopt
