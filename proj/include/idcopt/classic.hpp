#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "idcopt/evaluator.hpp"
#include "idcopt/genome.hpp"
#include "idcopt/run_record.hpp"

namespace idcopt {

// ---------------------------------------------------------------- annealing

enum class Mutation { random, swap };

/// Geometric cooling. When t0 is unset it is calibrated at start-up to
/// 10 x the median |cost change| over `calibration_samples` neighbours of the
/// initial solution; t_end defaults to t_end_ratio * t0.
struct SaParams {
  std::size_t max_iter = 100;
  double alpha = 0.95;
  std::optional<double> t0;
  double t_end_ratio = 1e-3;
  std::size_t calibration_samples = 20;
  Mutation mutation = Mutation::random;

  void validate() const;
};

/// Flips one uniformly chosen bit.
Genome sa_random_mutation(const Genome& g, RngStream& rng);
/// Exchanges a random 1 with a random 0; falls back to a random flip when the
/// genome is constant.
Genome sa_swap_mutation(const Genome& g, RngStream& rng);
/// 1 for delta <= 0, else exp(-delta / T). Throws DomainError for T <= 0.
double sa_accept(double delta, double temperature);

RunRecord run_sa(const SaParams& params, Evaluator& evaluator, std::uint64_t seed);

// ---------------------------------------------------------------- bee colony

/// Food sources = employed bees. Scouting is driven by the trial limit alone;
/// scout_fraction is carried for reporting and validation.
struct AbcParams {
  std::size_t total_bees = 30;
  std::size_t employed = 22;
  std::size_t onlookers = 5;
  double scout_fraction = 0.03;
  std::size_t limit = 50;
  std::size_t max_iter = 25;

  void validate() const;
};

/// p_i = f_i / sum f with f_i = 1 / (1 + cost_i). Throws DomainError when empty.
std::vector<double> abc_selection_probs(std::span<const double> costs);

RunRecord run_abc(const AbcParams& params, Evaluator& evaluator, std::uint64_t seed);

// ---------------------------------------------------------------- ant colony

/// Per-dimension, per-bit-value pheromone with max-min style clamping.
struct PheromoneTable {
  std::vector<std::array<double, 2>> tau;
  double rho = 0.1;
  double q = 1.0;
  double tau_min = 0.01;
  double tau_max = 10.0;
  double elitist_weight = 1.0;

  PheromoneTable() = default;
  PheromoneTable(std::size_t dimension, double initial) : tau(dimension, {initial, initial}) {}

  std::size_t dimension() const noexcept { return tau.size(); }
  double prob_one(std::size_t d) const { return tau[d][1] / (tau[d][0] + tau[d][1]); }
  bool within_bounds() const;
};

struct AcoParams {
  std::size_t ants = 25;
  std::size_t max_iter = 25;
  double rho = 0.1;
  double q = 1.0;
  double tau_init = 1.0;
  double tau_min = 0.01;
  double tau_max = 10.0;
  double elitist_weight = 1.0;

  void validate() const;
  PheromoneTable make_table(std::size_t dimension) const;
};

/// Sets bit d to 1 with probability tau[d][1] / (tau[d][0] + tau[d][1]).
Genome aco_construct(const PheromoneTable& table, RngStream& rng);

/// Evaporates, lets each ant deposit q / (1 + cost) on its chosen entries,
/// adds the elitist deposit for `elite` (if any), then clamps.
void aco_deposit(PheromoneTable& table, std::span<const Genome> solutions,
                 std::span<const double> costs, const Genome* elite, double elite_cost);

RunRecord run_aco(const AcoParams& params, Evaluator& evaluator, std::uint64_t seed);

// ---------------------------------------------------------------- ant lion

struct AloParams {
  std::size_t population = 25;
  std::size_t max_iter = 25;

  void validate() const;
};

/// Cumulative sum of +-1 fair steps, min-max normalized to [0, 1] (a constant
/// walk maps to 0.5). Throws DomainError when steps == 0.
std::vector<double> alo_random_walk(std::size_t steps, RngStream& rng);

/// Walk from explicit steps (+1 / -1); same normalization as alo_random_walk.
std::vector<double> normalize_walk(std::span<const int> steps);

/// Roulette over fitness 1 / (1 + cost). Throws DomainError when empty.
std::size_t alo_roulette(std::span<const double> costs, RngStream& rng);

/// Boundary shrink ratio I at iteration t: 1 until 10% of the run, then
/// 10^w * t / T with w = 2, 3, 4, 5, 6 past 10%, 50%, 75%, 90%, 95%.
double alo_shrink_ratio(std::size_t iteration, std::size_t max_iter);

RunRecord run_alo(const AloParams& params, Evaluator& evaluator, std::uint64_t seed);

}  // namespace idcopt
