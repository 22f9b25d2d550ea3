#include <algorithm>

#include "idcopt/classic.hpp"
#include "idcopt/errors.hpp"

namespace idcopt {

bool PheromoneTable::within_bounds() const {
  for (const auto& entry : tau) {
    for (double t : entry) {
      if (t < tau_min || t > tau_max) return false;
    }
  }
  return true;
}

void AcoParams::validate() const {
  if (ants < 1) throw ConfigError("aco.ants", "need at least one ant");
  if (max_iter < 1) throw ConfigError("aco.max_iter", "max_iter must be at least 1");
  if (!(rho > 0 && rho < 1)) throw ConfigError("aco.rho", "evaporation rate must lie in (0, 1)");
  if (!(q > 0)) throw ConfigError("aco.q", "deposit constant must be positive");
  if (!(tau_min > 0 && tau_min < tau_max)) {
    throw ConfigError("aco.tau_min", "need 0 < tau_min < tau_max");
  }
  if (tau_init < tau_min || tau_init > tau_max) {
    throw ConfigError("aco.tau_init", "initial pheromone outside [tau_min, tau_max]");
  }
  if (elitist_weight < 0) throw ConfigError("aco.elitist_weight", "must be non-negative");
}

PheromoneTable AcoParams::make_table(std::size_t dimension) const {
  PheromoneTable t(dimension, tau_init);
  t.rho = rho;
  t.q = q;
  t.tau_min = tau_min;
  t.tau_max = tau_max;
  t.elitist_weight = elitist_weight;
  return t;
}

Genome aco_construct(const PheromoneTable& table, RngStream& rng) {
  Genome g(table.dimension());
  for (std::size_t d = 0; d < table.dimension(); ++d) g.set(d, rng.uniform() < table.prob_one(d));
  return g;
}

void aco_deposit(PheromoneTable& table, std::span<const Genome> solutions,
                 std::span<const double> costs, const Genome* elite, double elite_cost) {
  for (auto& entry : table.tau) {
    entry[0] *= 1.0 - table.rho;
    entry[1] *= 1.0 - table.rho;
  }
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    const double amount = table.q / (1.0 + costs[k]);
    for (std::size_t d = 0; d < table.dimension(); ++d) table.tau[d][solutions[k][d]] += amount;
  }
  if (elite != nullptr) {
    const double amount = table.elitist_weight * table.q / (1.0 + elite_cost);
    for (std::size_t d = 0; d < table.dimension(); ++d) table.tau[d][(*elite)[d]] += amount;
  }
  for (auto& entry : table.tau) {
    for (double& t : entry) t = std::clamp(t, table.tau_min, table.tau_max);
  }
}

RunRecord run_aco(const AcoParams& params, Evaluator& evaluator, std::uint64_t seed) {
  params.validate();
  const std::size_t dim = evaluator.dimension();
  RngStream root(seed);
  RngStream construct_rng = root.derive("aco/construct");
  RunTracker tracker("aco", seed, evaluator);
  PheromoneTable table = params.make_table(dim);

  std::vector<Genome> ants(params.ants);
  std::vector<double> costs;
  // Iteration 0 constructs from the uniform table, i.e. the random initial
  // population; its deposit seeds the trail before the main loop.
  for (std::size_t it = 0; it <= params.max_iter; ++it) {
    for (auto& a : ants) a = aco_construct(table, construct_rng);
    const auto results = evaluator.evaluate_batch(ants);
    costs.clear();
    for (std::size_t k = 0; k < ants.size() && results[k]; ++k) {
      costs.push_back(*results[k]);
      tracker.offer(ants[k], *results[k]);
    }
    const bool exhausted = costs.size() < ants.size();
    if (it > 0 && !costs.empty()) tracker.end_iteration(it);
    if (exhausted) {
      tracker.mark_exhausted();
      break;
    }
    const Genome elite = tracker.best();
    aco_deposit(table, ants, costs, &elite, tracker.best_cost());
  }
  return tracker.finish();
}

}  // namespace idcopt
