#include "idcopt/algorithms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "idcopt/errors.hpp"

namespace idcopt {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"bpso", "sa",  "sa_swap", "abc",
                                                     "aco",  "alo", "rlbpso"};

std::size_t iterations_for(std::size_t budget, std::size_t per_iter, std::size_t fixed) {
  if (per_iter == 0 || budget <= fixed) return 1;
  return std::max<std::size_t>(1, (budget - fixed) / per_iter);
}

}  // namespace

std::span<const std::string_view> algorithm_names() { return kNames; }

bool is_algorithm(std::string_view name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

std::string display_name(std::string_view name) {
  if (name == "bpso") return "BPSO";
  if (name == "sa") return "SA with Random Mutation";
  if (name == "sa_swap") return "SA with Swap Mutation";
  if (name == "abc") return "ABC";
  if (name == "aco") return "ACO";
  if (name == "alo") return "ALO";
  if (name == "rlbpso") return "RLBPSO";
  return std::string(name);
}

RunRecord run_algorithm(std::string_view name, const AlgorithmConfig& config,
                        Evaluator& evaluator, std::uint64_t seed) {
  if (name == "bpso") return run_bpso(config.bpso, evaluator, seed);
  if (name == "rlbpso") return run_rlbpso(config.rlbpso, evaluator, seed);
  if (name == "abc") return run_abc(config.abc, evaluator, seed);
  if (name == "aco") return run_aco(config.aco, evaluator, seed);
  if (name == "alo") return run_alo(config.alo, evaluator, seed);
  if (name == "sa" || name == "sa_swap") {
    SaParams p = config.sa;
    p.mutation = name == "sa" ? Mutation::random : Mutation::swap;
    return run_sa(p, evaluator, seed);
  }
  throw ConfigError("algorithms", "unknown algorithm '" + std::string(name) + "'");
}

std::size_t nominal_evaluations(std::string_view name, const AlgorithmConfig& c) {
  if (name == "bpso") return c.bpso.swarm_size * (c.bpso.max_iter + 1);
  if (name == "rlbpso") return c.rlbpso.swarm_size * (c.rlbpso.max_iter + 1);
  if (name == "aco") return c.aco.ants * (c.aco.max_iter + 1);
  if (name == "alo") return c.alo.population * (c.alo.max_iter + 1);
  if (name == "abc") return c.abc.employed + c.abc.max_iter * (c.abc.employed + c.abc.onlookers);
  if (name == "sa" || name == "sa_swap") {
    return 1 + (c.sa.t0 ? 0 : c.sa.calibration_samples) + c.sa.max_iter;
  }
  throw ConfigError("algorithms", "unknown algorithm '" + std::string(name) + "'");
}

AlgorithmConfig scale_to_budget(AlgorithmConfig c, std::size_t budget) {
  c.bpso.max_iter = iterations_for(budget, c.bpso.swarm_size, c.bpso.swarm_size);
  c.rlbpso.max_iter = iterations_for(budget, c.rlbpso.swarm_size, c.rlbpso.swarm_size);
  c.aco.max_iter = iterations_for(budget, c.aco.ants, c.aco.ants);
  c.alo.max_iter = iterations_for(budget, c.alo.population, c.alo.population);
  c.abc.max_iter = iterations_for(budget, c.abc.employed + c.abc.onlookers, c.abc.employed);
  c.sa.max_iter =
      iterations_for(budget, 1, 1 + (c.sa.t0 ? 0 : c.sa.calibration_samples));
  c.sa.alpha = std::pow(c.sa.t_end_ratio, 1.0 / static_cast<double>(c.sa.max_iter));
  return c;
}

void set_population(AlgorithmConfig& c, std::string_view name, std::size_t n) {
  if (name == "bpso") {
    c.bpso.swarm_size = n;
  } else if (name == "rlbpso") {
    c.rlbpso.swarm_size = n;
  } else if (name == "aco") {
    c.aco.ants = n;
  } else if (name == "alo") {
    c.alo.population = n;
  } else if (name == "abc") {
    c.abc.employed = n;
    c.abc.onlookers = n;
    c.abc.total_bees = 2 * n;
  } else if (!is_algorithm(name)) {
    throw ConfigError("algorithms", "unknown algorithm '" + std::string(name) + "'");
  }
  // SA is single-solution: nothing to scale.
}

}  // namespace idcopt
