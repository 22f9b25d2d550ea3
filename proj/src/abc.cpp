#include "idcopt/classic.hpp"
#include "idcopt/errors.hpp"

namespace idcopt {

void AbcParams::validate() const {
  if (employed < 1) throw ConfigError("abc.employed", "need at least one employed bee");
  if (employed + onlookers > total_bees) {
    throw ConfigError("abc.total_bees", "employed + onlookers exceeds total bees");
  }
  if (scout_fraction < 0 || scout_fraction > 1) {
    throw ConfigError("abc.scout_fraction", "must lie in [0, 1]");
  }
  if (limit < 1) throw ConfigError("abc.limit", "limit must be at least 1");
  if (max_iter < 1) throw ConfigError("abc.max_iter", "max_iter must be at least 1");
}

std::vector<double> abc_selection_probs(std::span<const double> costs) {
  if (costs.empty()) throw DomainError("abc_selection_probs: empty population");
  std::vector<double> p(costs.size());
  double total = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    p[i] = 1.0 / (1.0 + costs[i]);
    total += p[i];
  }
  for (auto& v : p) v /= total;
  return p;
}

namespace {

std::size_t spin(std::span<const double> probs, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  return probs.size() - 1;
}

}  // namespace

RunRecord run_abc(const AbcParams& params, Evaluator& evaluator, std::uint64_t seed) {
  params.validate();
  const std::size_t dim = evaluator.dimension();
  const std::size_t n = params.employed;
  RngStream root(seed);
  RngStream init_rng = root.derive("abc/init");
  RngStream employed_rng = root.derive("abc/employed");
  RngStream onlooker_rng = root.derive("abc/onlooker");
  RngStream scout_rng = root.derive("abc/scout");
  RunTracker tracker("abc", seed, evaluator);

  std::vector<Genome> sources(n);
  std::vector<double> cost(n);
  std::vector<std::size_t> trials(n, 0);
  for (auto& s : sources) s = Genome::random(dim, init_rng);
  auto init = evaluator.evaluate_batch(sources);
  for (std::size_t i = 0; i < n; ++i) {
    if (!init[i]) {
      tracker.mark_exhausted();
      return tracker.finish();
    }
    cost[i] = *init[i];
    tracker.offer(sources[i], cost[i]);
  }

  auto greedy = [&](std::size_t i, const Genome& candidate, double c) {
    tracker.offer(candidate, c);
    if (c < cost[i]) {
      sources[i] = candidate;
      cost[i] = c;
      trials[i] = 0;
    } else {
      ++trials[i];
    }
  };

  std::vector<Genome> batch(n);
  for (std::size_t it = 1; it <= params.max_iter; ++it) {
    const std::size_t evals_before = evaluator.meter().evaluations_used;
    const std::size_t hits_before = evaluator.meter().cache_hits;
    try {
      // Employed bees: one-bit neighbour of each source, evaluated as a batch.
      for (std::size_t i = 0; i < n; ++i) {
        batch[i] = sources[i];
        batch[i].flip(employed_rng.below(dim));
      }
      auto costs = evaluator.evaluate_batch(batch);
      for (std::size_t i = 0; i < n; ++i) {
        if (!costs[i]) throw BudgetExhausted();
        greedy(i, batch[i], *costs[i]);
      }

      // Onlookers pick sources by fitness and search sequentially.
      const auto probs = abc_selection_probs(cost);
      for (std::size_t k = 0; k < params.onlookers; ++k) {
        const std::size_t i = spin(probs, onlooker_rng.uniform());
        Genome candidate = sources[i];
        candidate.flip(onlooker_rng.below(dim));
        greedy(i, candidate, evaluator.evaluate(candidate));
      }

      // Scouts abandon exhausted sources.
      for (std::size_t i = 0; i < n; ++i) {
        if (trials[i] < params.limit) continue;
        Genome fresh = Genome::random(dim, scout_rng);
        const double c = evaluator.evaluate(fresh);
        sources[i] = std::move(fresh);
        cost[i] = c;
        trials[i] = 0;
        tracker.offer(sources[i], c);
      }
    } catch (const BudgetExhausted&) {
      if (evaluator.meter().evaluations_used > evals_before ||
          evaluator.meter().cache_hits > hits_before) {
        tracker.end_iteration(it);
      }
      tracker.mark_exhausted();
      break;
    }
    tracker.end_iteration(it);
  }
  return tracker.finish();
}

}  // namespace idcopt
