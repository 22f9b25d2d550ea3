#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "idcopt/evaluator.hpp"
#include "idcopt/genome.hpp"
#include "idcopt/run_record.hpp"

namespace idcopt {

/// Binary PSO with a V-shaped transfer function and flip-based position
/// update. Defaults: w = 1, c1 = c2 = 2, transfer factor rising from d = 1
/// toward e = 2, 25 particles, 25 iterations.
struct BpsoParams {
  double w = 1.0;
  double c1 = 2.0;
  double c2 = 2.0;
  double e = 2.0;  // maximum transfer factor
  double d = 1.0;  // minimum transfer factor
  std::size_t swarm_size = 25;
  std::size_t max_iter = 25;
  /// Velocity magnitude bound; nullopt disables clamping.
  std::optional<double> v_clamp = 6.0;

  /// Throws ConfigError on swarm_size or max_iter of 0, or unless e > d > 0.
  void validate() const;
};

struct ParticleState {
  Genome position;
  std::vector<double> velocity;
  Genome best_position;
  double best_cost = 0.0;
};

/// V' = w V + c1 r1 (P - X) + c2 r2 (G - X), per dimension, optionally clamped.
/// Throws DomainError on length mismatch.
std::vector<double> velocity_update(std::span<const double> velocity, const Genome& position,
                                    const Genome& personal_best, const Genome& global_best,
                                    const BpsoParams& params, std::span<const double> r1,
                                    std::span<const double> r2);

/// a = e - (e - d) / i for 1-based iteration i. Throws DomainError if i < 1.
double transfer_factor(std::size_t iteration, double e, double d);

/// V-shaped transfer: |2 / (1 + exp(-a v)) - 1|, written as the two branches.
double transfer_function(double v, double a);

/// Flips bit k when tf[k] > r[k], keeps it otherwise.
Genome position_update(const Genome& position, std::span<const double> tf,
                       std::span<const double> r);

/// Synchronous variant of the per-particle loop: every particle moves against
/// the global best from the start of the iteration, the swarm is evaluated as
/// one ordered batch, then personal and global bests are updated in particle
/// order. Stops at max_iter or on budget exhaustion.
RunRecord run_bpso(const BpsoParams& params, Evaluator& evaluator, std::uint64_t seed);

}  // namespace idcopt
