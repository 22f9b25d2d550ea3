#include "idcopt/evaluator.hpp"

#include <exception>
#include <mutex>

#include "idcopt/errors.hpp"

namespace idcopt {

std::optional<double> EvalCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void EvalCache::insert(const std::string& key, double cost) {
  std::unique_lock lock(mutex_);
  map_.emplace(key, cost);
}

std::size_t EvalCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

Evaluator::Evaluator(const Objective& objective, std::size_t max_evaluations,
                     EvalOptions options)
    : objective_(objective), options_(options) {
  meter_.evaluations_max = max_evaluations;
}

double Evaluator::evaluate(const Genome& g) {
  if (g.size() != objective_.dimension()) {
    throw EncodingError("genome length " + std::to_string(g.size()) +
                        " does not match objective dimension " +
                        std::to_string(objective_.dimension()));
  }
  std::string key;
  if (options_.use_cache) {
    key = g.to_text();
    if (auto hit = cache_.find(key)) {
      ++meter_.cache_hits;
      return *hit;
    }
  }
  if (meter_.exhausted()) throw BudgetExhausted();
  const double cost = objective_.cost(g);
  ++meter_.evaluations_used;
  if (options_.use_cache) cache_.insert(key, cost);
  return cost;
}

std::vector<std::optional<double>> Evaluator::evaluate_batch(std::span<const Genome> genomes) {
  std::vector<std::optional<double>> results(genomes.size());
  const bool fan_out = options_.exec == Exec::parallel && objective_.concurrent_safe();
  if (!fan_out) {
    for (std::size_t i = 0; i < genomes.size(); ++i) {
      try {
        results[i] = evaluate(genomes[i]);
      } catch (const BudgetExhausted&) {
        break;
      }
    }
    return results;
  }

  for (const auto& g : genomes) {
    if (g.size() != objective_.dimension()) {
      throw EncodingError("genome length does not match objective dimension");
    }
  }

  // Plan serially: decide hits, charge budget to distinct misses in order.
  std::vector<std::string> keys(genomes.size());
  std::vector<std::size_t> source(genomes.size(), SIZE_MAX);  // index of computing entry
  std::vector<std::size_t> misses;
  std::unordered_map<std::string, std::size_t> pending;
  std::size_t stop = genomes.size();
  std::size_t budget = meter_.remaining();
  for (std::size_t i = 0; i < genomes.size(); ++i) {
    if (options_.use_cache) {
      keys[i] = genomes[i].to_text();
      if (auto hit = cache_.find(keys[i])) {
        results[i] = *hit;
        continue;
      }
      if (auto it = pending.find(keys[i]); it != pending.end()) {
        source[i] = it->second;
        continue;
      }
    }
    if (budget == 0) {
      stop = i;
      break;
    }
    --budget;
    source[i] = i;
    misses.push_back(i);
    if (options_.use_cache) pending.emplace(keys[i], i);
  }

  std::vector<double> computed(misses.size(), 0.0);
  std::vector<std::exception_ptr> errors(misses.size());
  const auto n = static_cast<std::ptrdiff_t>(misses.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      computed[k] = objective_.cost(genomes[misses[k]]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  // Merge in submission order, replaying the serial meter updates.
  std::unordered_map<std::size_t, double> by_index;
  std::size_t next_miss = 0;
  for (std::size_t i = 0; i < stop; ++i) {
    if (results[i] && source[i] == SIZE_MAX) {
      ++meter_.cache_hits;
      continue;
    }
    if (source[i] == i) {
      const std::size_t k = next_miss++;
      if (errors[k]) std::rethrow_exception(errors[k]);
      ++meter_.evaluations_used;
      if (options_.use_cache) cache_.insert(keys[i], computed[k]);
      by_index.emplace(i, computed[k]);
      results[i] = computed[k];
    } else {
      ++meter_.cache_hits;
      results[i] = by_index.at(source[i]);
    }
  }
  return results;
}

}  // namespace idcopt
