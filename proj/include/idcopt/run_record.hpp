#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "idcopt/evaluator.hpp"
#include "idcopt/genome.hpp"

namespace idcopt {

struct IterationEntry {
  std::size_t iteration = 0;
  std::size_t evaluations = 0;
  double best_cost = 0.0;
};

/// Trace of one seeded optimizer run. `entries` holds one row per iteration
/// that was started; the global best sequence is non-increasing.
struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<IterationEntry> entries;
  Genome best;
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
  std::size_t cache_hits = 0;
  bool budget_exhausted = false;
  double wall_seconds = 0.0;

  std::size_t iterations() const noexcept { return entries.size(); }
  /// "iteration,evaluations,best_cost" header plus one row per entry.
  std::string convergence_csv() const;
};

/// Global-best bookkeeping shared by all optimizers.
class RunTracker {
 public:
  RunTracker(std::string algorithm, std::uint64_t seed, const Evaluator& evaluator);

  /// Replaces the incumbent only on strict improvement. Returns true if replaced.
  bool offer(const Genome& g, double cost);
  double best_cost() const noexcept { return record_.best_cost; }
  const Genome& best() const noexcept { return record_.best; }
  bool has_best() const noexcept { return record_.best.size() != 0; }

  void end_iteration(std::size_t iteration);
  void mark_exhausted() { record_.budget_exhausted = true; }

  RunRecord finish();

 private:
  RunRecord record_;
  const Evaluator& evaluator_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace idcopt
