#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "idcopt/genome.hpp"
#include "idcopt/objective.hpp"
#include "idcopt/parallel.hpp"

namespace idcopt {

struct BudgetMeter {
  std::size_t evaluations_used = 0;
  std::size_t evaluations_max = 0;
  std::size_t cache_hits = 0;

  std::size_t remaining() const noexcept {
    return evaluations_max > evaluations_used ? evaluations_max - evaluations_used : 0;
  }
  bool exhausted() const noexcept { return remaining() == 0; }
};

/// Exact-match genome -> cost map keyed on the text form. No eviction.
/// Lookups take a shared lock; inserts take an exclusive one.
class EvalCache {
 public:
  std::optional<double> find(const std::string& key) const;
  void insert(const std::string& key, double cost);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, double> map_;
};

struct EvalOptions {
  bool use_cache = true;
  Exec exec = Exec::serial;
};

/// Metered, cached front-end to an Objective.
///
/// Cache hits are free. A miss consumes one evaluation; a miss with no budget
/// left raises BudgetExhausted without calling the objective.
class Evaluator {
 public:
  Evaluator(const Objective& objective, std::size_t max_evaluations, EvalOptions options = {});

  const Objective& objective() const noexcept { return objective_; }
  std::size_t dimension() const { return objective_.dimension(); }
  const BudgetMeter& meter() const noexcept { return meter_; }
  const EvalOptions& options() const noexcept { return options_; }

  double evaluate(const Genome& g);

  /// Evaluates genomes as if evaluate() were called on each in order,
  /// stopping at the first one the budget cannot cover. Entries from that
  /// point on are nullopt. With Exec::parallel the distinct cache misses are
  /// computed concurrently (when the objective allows it) and merged back in
  /// submission order, so results and meter state match the serial path.
  std::vector<std::optional<double>> evaluate_batch(std::span<const Genome> genomes);

 private:
  const Objective& objective_;
  EvalOptions options_;
  BudgetMeter meter_;
  EvalCache cache_;
};

}  // namespace idcopt
