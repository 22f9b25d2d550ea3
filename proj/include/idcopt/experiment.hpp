#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "idcopt/config.hpp"
#include "idcopt/run_record.hpp"

namespace idcopt {

/// One (algorithm, seed) pair of a campaign. `record` is empty when the run
/// threw; `error` then holds the message.
struct CellResult {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::optional<RunRecord> record;
  std::string error;

  bool ok() const noexcept { return record.has_value(); }
};

struct ReportRow {
  std::string algorithm;
  std::string display;
  double best_cost = 0.0;
  double median_cost = 0.0;
  /// Per-seed final costs in seed order; nullopt marks a failed cell.
  std::vector<std::optional<double>> costs;
  std::vector<std::size_t> evaluations;
  std::vector<double> wall_seconds;
  std::size_t failed = 0;
};

/// Rows sorted by median best cost ascending (registry order on ties);
/// algorithms whose every cell failed sort last.
struct ComparisonReport {
  std::string title;
  std::vector<std::uint64_t> seeds;
  std::vector<ReportRow> rows;

  /// Aligned two-column table (Algorithms | Cost) plus median and evaluations.
  std::string to_text() const;
  std::string to_csv() const;
  /// Wall time per seed, in seconds; not deterministic.
  std::string timing_text() const;
};

ComparisonReport build_report(const std::vector<CellResult>& cells,
                              const std::vector<std::string>& algorithms,
                              const std::vector<std::uint64_t>& seeds, std::string title);

struct ExperimentResult {
  std::vector<CellResult> cells;
  ComparisonReport report;
};

/// Runs every (algorithm, seed) cell with its own evaluator, cache and
/// budget. With cfg.parallel the cells run on OpenMP threads when the
/// objective allows concurrent calls; otherwise batch evaluation inside each
/// cell is parallelized. Failures are recorded per cell, never rethrown.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes <algo>_seed<seed>.csv, <algo>_seed<seed>_best.txt, report.txt,
/// report.csv and timing.txt into `dir` (created if missing).
void write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg,
                   const std::filesystem::path& dir);

}  // namespace idcopt
