#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idcopt/actor_critic.hpp"
#include "idcopt/evaluator.hpp"
#include "idcopt/run_record.hpp"

namespace idcopt {

struct ParamRange {
  double lo = 0.0;
  double hi = 1.0;

  double map(double unit) const { return lo + (hi - lo) * unit; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

/// Operating parameters of one particle group.
struct GroupParams {
  double w = 0.7;
  double c1 = 1.5;
  double c2 = 1.5;
  double c3 = 1.5;
  double c4 = 0.5;
};

/// Reinforcement-learning adaptive BPSO. An actor network picks w, c1..c4
/// per particle group from (iteration fraction, diversity, stagnation); a
/// critic trained on an improvement reward supplies the actor's gradient.
/// The exact state, action and reward forms are listed in README.md.
struct RlbpsoParams {
  std::size_t swarm_size = 25;
  std::size_t max_iter = 25;
  std::size_t groups = 5;
  /// When false, iterate until the evaluation budget is spent (hard stop at
  /// 1000 * max_iter iterations) instead of stopping at max_iter.
  bool iteration_cap = true;

  ParamRange w{0.4, 1.0};
  ParamRange c1{0.5, 2.5};
  ParamRange c2{0.5, 2.5};
  ParamRange c3{0.5, 2.5};
  ParamRange c4{0.0, 1.0};

  double v_clamp = 1.0;
  double noise_start = 0.1;
  double noise_end = 0.01;
  /// Per-dimension chance of learning from a tournament-picked exemplar.
  double exemplar_probability = 0.3;
  /// Stagnant iterations before a particle's exemplar map is rebuilt.
  std::size_t exemplar_refresh = 7;
  /// Stagnant iterations before a particle becomes eligible for reinit.
  std::size_t flag_threshold = 5;
  /// Start from an all-zero actor (every action at its range midpoint).
  bool zero_actor = false;

  ActorCriticConfig network{};

  /// Throws ConfigError on invalid sizes or ranges.
  void validate() const;
};

struct RlParticle {
  std::vector<double> position;  // continuous, in [0, 1]^D
  std::vector<double> velocity;
  std::vector<double> best_position;
  double best_cost = 0.0;
  /// Index of the particle whose personal best teaches each dimension.
  std::vector<std::size_t> exemplar;
  std::size_t stagnant = 0;          // iterations since best_cost improved
  std::size_t since_refresh = 0;     // stagnant iterations since exemplar rebuild
};

/// (iteration / max_iter, diversity, stagnation / max_iter), each clipped to [0, 1].
RlState state_features(std::span<const std::vector<double>> positions,
                       std::span<const double> best_position, std::size_t iteration,
                       std::size_t max_iter, std::size_t stagnation_count);

/// Maps normalized actions (5 per group, in [0, 1]) to parameter values.
std::vector<GroupParams> decode_actions(std::span<const double> unit_actions,
                                        const RlbpsoParams& params);

/// Group of particle `index` when `swarm_size` particles are split into
/// `groups` equal groups; leftovers join the last group.
std::size_t group_of(std::size_t index, std::size_t swarm_size, std::size_t groups);

/// V' = w V + c1 r1 (pbest_fi - X) + c2 r2 (gbest - X) + c3 r3 (pbest - X),
/// clamped to +-v_clamp. Throws DomainError on length mismatch.
std::vector<double> rl_velocity_update(std::span<const double> velocity,
                                       std::span<const double> position,
                                       std::span<const double> exemplar_best,
                                       std::span<const double> global_best,
                                       std::span<const double> personal_best,
                                       const GroupParams& gp, double v_clamp,
                                       std::span<const double> r1, std::span<const double> r2,
                                       std::span<const double> r3);

enum class MoveKind { step, reinitialize };

/// Draws one uniform u and reinitializes when u < c4 * 0.01 * flag.
MoveKind reinit_check(double c4, bool flag, RngStream& rng);

/// Applies a move decision: reinitialize draws a fresh uniform position and
/// zeroes the velocity (personal best kept); step adds the velocity and clips
/// to [0, 1].
void apply_move(RlParticle& particle, MoveKind kind, RngStream& rng);

/// (prev - new) / prev on strict improvement, otherwise -0.01.
double reward(double prev_best, double new_best);

/// Rebuilds the exemplar map of particle `self`: each dimension picks the
/// better personal best of two random particles with probability `p`,
/// otherwise the particle's own index.
void refresh_exemplar(std::vector<RlParticle>& swarm, std::size_t self, double p,
                      RngStream& rng);

RunRecord run_rlbpso(const RlbpsoParams& params, Evaluator& evaluator, std::uint64_t seed);

/// Same as run_rlbpso but starts from (and leaves trained) the given networks.
RunRecord run_rlbpso(const RlbpsoParams& params, Evaluator& evaluator, std::uint64_t seed,
                     ActorCritic& agent);

/// Networks sized for `params` with weights drawn from the seed's weight stream.
ActorCritic make_agent(const RlbpsoParams& params, std::uint64_t seed);

}  // namespace idcopt
