#include <algorithm>
#include <cmath>

#include "idcopt/classic.hpp"
#include "idcopt/errors.hpp"

namespace idcopt {

void SaParams::validate() const {
  if (max_iter < 1) throw ConfigError("sa.max_iter", "max_iter must be at least 1");
  if (!(alpha > 0 && alpha < 1)) throw ConfigError("sa.alpha", "cooling rate must lie in (0, 1)");
  if (t0 && !(*t0 > 0)) throw ConfigError("sa.t0", "initial temperature must be positive");
  if (!(t_end_ratio > 0 && t_end_ratio < 1)) {
    throw ConfigError("sa.t_end_ratio", "final/initial temperature ratio must lie in (0, 1)");
  }
}

Genome sa_random_mutation(const Genome& g, RngStream& rng) {
  Genome next = g;
  next.flip(rng.below(g.size()));
  return next;
}

Genome sa_swap_mutation(const Genome& g, RngStream& rng) {
  const std::size_t ones = g.count_ones();
  if (ones == 0 || ones == g.size()) return sa_random_mutation(g, rng);
  std::size_t pick_one = rng.below(ones);
  std::size_t pick_zero = rng.below(g.size() - ones);
  Genome next = g;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i]) {
      if (pick_one-- == 0) next.set(i, false);
    } else {
      if (pick_zero-- == 0) next.set(i, true);
    }
  }
  return next;
}

double sa_accept(double delta, double temperature) {
  if (!(temperature > 0)) throw DomainError("sa_accept: temperature must be positive");
  if (delta <= 0) return 1.0;
  return std::exp(-delta / temperature);
}

RunRecord run_sa(const SaParams& params, Evaluator& evaluator, std::uint64_t seed) {
  params.validate();
  const std::size_t dim = evaluator.dimension();
  RngStream root(seed);
  RngStream init_rng = root.derive("sa/init");
  RngStream move_rng = root.derive("sa/move");
  RngStream accept_rng = root.derive("sa/accept");
  const char* label = params.mutation == Mutation::random ? "sa" : "sa_swap";
  RunTracker tracker(label, seed, evaluator);
  auto mutate = [&](const Genome& g, RngStream& rng) {
    return params.mutation == Mutation::random ? sa_random_mutation(g, rng)
                                               : sa_swap_mutation(g, rng);
  };

  try {
    Genome current = Genome::random(dim, init_rng);
    double current_cost = evaluator.evaluate(current);
    tracker.offer(current, current_cost);

    double t0 = 1.0;
    if (params.t0) {
      t0 = *params.t0;
    } else {
      std::vector<double> deltas;
      for (std::size_t k = 0; k < params.calibration_samples; ++k) {
        const Genome probe = mutate(current, init_rng);
        const double c = evaluator.evaluate(probe);
        tracker.offer(probe, c);
        deltas.push_back(std::abs(c - current_cost));
      }
      if (!deltas.empty()) {
        auto mid = deltas.begin() + static_cast<std::ptrdiff_t>(deltas.size() / 2);
        std::nth_element(deltas.begin(), mid, deltas.end());
        double median = *mid;
        if (deltas.size() % 2 == 0) {
          median = 0.5 * (median + *std::max_element(deltas.begin(), mid));
        }
        if (median > 0) t0 = 10.0 * median;
      }
    }
    const double t_end = params.t_end_ratio * t0;
    double temperature = t0;

    for (std::size_t it = 1; it <= params.max_iter; ++it) {
      const Genome candidate = mutate(current, move_rng);
      const double cost = evaluator.evaluate(candidate);
      const double u = accept_rng.uniform();
      if (u < sa_accept(cost - current_cost, temperature)) {
        current = candidate;
        current_cost = cost;
      }
      tracker.offer(candidate, cost);
      tracker.end_iteration(it);
      temperature = std::max(params.alpha * temperature, t_end);
    }
  } catch (const BudgetExhausted&) {
    tracker.mark_exhausted();
  }
  return tracker.finish();
}

}  // namespace idcopt
