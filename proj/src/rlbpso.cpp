#include "idcopt/rlbpso.hpp"

#include <algorithm>

#include "idcopt/diversity.hpp"
#include "idcopt/errors.hpp"

namespace idcopt {

namespace {

constexpr std::size_t kParamsPerGroup = 5;

void check_range(const ParamRange& r, const char* field) {
  if (!(r.lo <= r.hi)) throw ConfigError(field, "range lower bound exceeds upper bound");
}

}  // namespace

void RlbpsoParams::validate() const {
  if (swarm_size < 1) throw ConfigError("rlbpso.swarm", "swarm size must be at least 1");
  if (max_iter < 1) throw ConfigError("rlbpso.max_iter", "max_iter must be at least 1");
  if (groups < 1) throw ConfigError("rlbpso.groups", "need at least one group");
  if (network.action_size != kParamsPerGroup * groups) {
    throw ConfigError("rlbpso.groups", "network action size must be 5 x groups");
  }
  check_range(w, "rlbpso.w");
  check_range(c1, "rlbpso.c1");
  check_range(c2, "rlbpso.c2");
  check_range(c3, "rlbpso.c3");
  check_range(c4, "rlbpso.c4");
  if (!(v_clamp > 0)) throw ConfigError("rlbpso.v_clamp", "v_clamp must be positive");
  if (noise_start < 0 || noise_end < 0) throw ConfigError("rlbpso.noise", "noise must be >= 0");
  if (exemplar_probability < 0 || exemplar_probability > 1) {
    throw ConfigError("rlbpso.exemplar_probability", "must lie in [0, 1]");
  }
}

RlState state_features(std::span<const std::vector<double>> positions,
                       std::span<const double> best_position, std::size_t iteration,
                       std::size_t max_iter, std::size_t stagnation_count) {
  const double m = static_cast<double>(std::max<std::size_t>(max_iter, 1));
  RlState s;
  s.iter_pct = std::clamp(static_cast<double>(iteration) / m, 0.0, 1.0);
  s.diversity = std::clamp(swarm_diversity(positions, best_position), 0.0, 1.0);
  s.stagnation_pct = std::clamp(static_cast<double>(stagnation_count) / m, 0.0, 1.0);
  return s;
}

std::vector<GroupParams> decode_actions(std::span<const double> unit_actions,
                                        const RlbpsoParams& params) {
  if (unit_actions.size() != kParamsPerGroup * params.groups) {
    throw DomainError("decode_actions: expected 5 actions per group");
  }
  std::vector<GroupParams> out(params.groups);
  for (std::size_t g = 0; g < params.groups; ++g) {
    const double* u = unit_actions.data() + kParamsPerGroup * g;
    out[g] = {params.w.map(u[0]), params.c1.map(u[1]), params.c2.map(u[2]),
              params.c3.map(u[3]), params.c4.map(u[4])};
  }
  return out;
}

std::size_t group_of(std::size_t index, std::size_t swarm_size, std::size_t groups) {
  const std::size_t per_group = std::max<std::size_t>(swarm_size / groups, 1);
  return std::min(index / per_group, groups - 1);
}

std::vector<double> rl_velocity_update(std::span<const double> velocity,
                                       std::span<const double> position,
                                       std::span<const double> exemplar_best,
                                       std::span<const double> global_best,
                                       std::span<const double> personal_best,
                                       const GroupParams& gp, double v_clamp,
                                       std::span<const double> r1, std::span<const double> r2,
                                       std::span<const double> r3) {
  const std::size_t n = velocity.size();
  for (std::size_t len : {position.size(), exemplar_best.size(), global_best.size(),
                          personal_best.size(), r1.size(), r2.size(), r3.size()}) {
    if (len != n) throw DomainError("rl_velocity_update: dimension mismatch");
  }
  std::vector<double> next(n);
  for (std::size_t d = 0; d < n; ++d) {
    const double x = position[d];
    const double v = gp.w * velocity[d] + gp.c1 * r1[d] * (exemplar_best[d] - x) +
                     gp.c2 * r2[d] * (global_best[d] - x) +
                     gp.c3 * r3[d] * (personal_best[d] - x);
    next[d] = std::clamp(v, -v_clamp, v_clamp);
  }
  return next;
}

MoveKind reinit_check(double c4, bool flag, RngStream& rng) {
  const double u = rng.uniform();
  return u < c4 * 0.01 * (flag ? 1.0 : 0.0) ? MoveKind::reinitialize : MoveKind::step;
}

void apply_move(RlParticle& particle, MoveKind kind, RngStream& rng) {
  if (kind == MoveKind::reinitialize) {
    for (auto& x : particle.position) x = rng.uniform();
    std::fill(particle.velocity.begin(), particle.velocity.end(), 0.0);
    return;
  }
  for (std::size_t d = 0; d < particle.position.size(); ++d) {
    particle.position[d] = std::clamp(particle.position[d] + particle.velocity[d], 0.0, 1.0);
  }
}

double reward(double prev_best, double new_best) {
  if (new_best < prev_best && prev_best > 0) return (prev_best - new_best) / prev_best;
  return -0.01;
}

void refresh_exemplar(std::vector<RlParticle>& swarm, std::size_t self, double p,
                      RngStream& rng) {
  auto& map = swarm[self].exemplar;
  const std::size_t n = swarm.size();
  for (auto& e : map) {
    e = self;
    if (rng.uniform() < p) {
      const std::size_t a = rng.below(n);
      const std::size_t b = rng.below(n);
      e = swarm[b].best_cost < swarm[a].best_cost ? b : a;
    }
  }
}

ActorCritic make_agent(const RlbpsoParams& params, std::uint64_t seed) {
  RngStream weight_rng = RngStream(seed).derive("rlbpso/weights");
  ActorCritic agent(params.network, weight_rng);
  if (params.zero_actor) agent.zero_actor();
  return agent;
}

RunRecord run_rlbpso(const RlbpsoParams& params, Evaluator& evaluator, std::uint64_t seed) {
  params.validate();
  ActorCritic agent = make_agent(params, seed);
  return run_rlbpso(params, evaluator, seed, agent);
}

RunRecord run_rlbpso(const RlbpsoParams& params, Evaluator& evaluator, std::uint64_t seed,
                     ActorCritic& agent) {
  params.validate();
  const std::size_t dim = evaluator.dimension();
  const std::size_t n = params.swarm_size;
  RngStream root(seed);
  RngStream init_rng = root.derive("rlbpso/init");
  RngStream velocity_rng = root.derive("rlbpso/velocity");
  RngStream reinit_rng = root.derive("rlbpso/reinit");
  RngStream exemplar_rng = root.derive("rlbpso/exemplar");
  RngStream noise_rng = root.derive("rlbpso/noise");
  RngStream replay_rng = root.derive("rlbpso/replay");
  RunTracker tracker("rlbpso", seed, evaluator);

  std::vector<RlParticle> swarm(n);
  std::vector<Genome> batch(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto& particle = swarm[p];
    particle.position.resize(dim);
    particle.velocity.resize(dim);
    for (auto& x : particle.position) x = init_rng.uniform();
    for (auto& v : particle.velocity) v = init_rng.uniform(-params.v_clamp, params.v_clamp);
    particle.exemplar.assign(dim, p);
    batch[p] = binarize(particle.position);
  }

  auto costs = evaluator.evaluate_batch(batch);
  std::vector<double> global_best_position;
  for (std::size_t p = 0; p < n; ++p) {
    if (!costs[p]) {
      tracker.mark_exhausted();
      return tracker.finish();
    }
    swarm[p].best_position = swarm[p].position;
    swarm[p].best_cost = *costs[p];
    if (tracker.offer(batch[p], *costs[p])) global_best_position = swarm[p].position;
  }
  for (std::size_t p = 0; p < n; ++p) {
    refresh_exemplar(swarm, p, params.exemplar_probability, exemplar_rng);
  }

  std::vector<std::vector<double>> positions(n);
  auto current_positions = [&] {
    for (std::size_t p = 0; p < n; ++p) positions[p] = swarm[p].position;
    return std::span<const std::vector<double>>(positions);
  };

  std::size_t stagnation = 0;
  const std::size_t hard_stop = params.iteration_cap ? params.max_iter : 1000 * params.max_iter;
  auto progress = [&](std::size_t it) -> std::size_t {
    if (params.iteration_cap) return it;
    // Budget-driven mode reports progress as a fraction of the evaluation budget.
    const auto& m = evaluator.meter();
    return m.evaluations_max == 0 ? params.max_iter
                                  : m.evaluations_used * params.max_iter / m.evaluations_max;
  };

  std::vector<double> r1(dim), r2(dim), r3(dim), teacher(dim);
  RlState state = state_features(current_positions(), global_best_position, progress(0),
                                 params.max_iter, stagnation);
  for (std::size_t it = 1; it <= hard_stop; ++it) {
    const double frac = std::min(1.0, static_cast<double>(progress(it)) /
                                          static_cast<double>(params.max_iter));
    const double noise = params.noise_start + (params.noise_end - params.noise_start) * frac;
    const auto unit_action = agent.act(state, noise, noise_rng);
    const auto group_params = decode_actions(unit_action, params);

    for (std::size_t p = 0; p < n; ++p) {
      auto& particle = swarm[p];
      const GroupParams& gp = group_params[group_of(p, n, params.groups)];
      for (std::size_t d = 0; d < dim; ++d) {
        r1[d] = velocity_rng.uniform();
        r2[d] = velocity_rng.uniform();
        r3[d] = velocity_rng.uniform();
        teacher[d] = swarm[particle.exemplar[d]].best_position[d];
      }
      particle.velocity =
          rl_velocity_update(particle.velocity, particle.position, teacher, global_best_position,
                             particle.best_position, gp, params.v_clamp, r1, r2, r3);
      const bool flag = particle.stagnant >= params.flag_threshold;
      apply_move(particle, reinit_check(gp.c4, flag, reinit_rng), reinit_rng);
      batch[p] = binarize(particle.position);
    }

    const double prev_best = tracker.best_cost();
    costs = evaluator.evaluate_batch(batch);
    std::size_t done = 0;
    for (std::size_t p = 0; p < n && costs[p]; ++p, ++done) {
      auto& particle = swarm[p];
      if (*costs[p] < particle.best_cost) {
        particle.best_cost = *costs[p];
        particle.best_position = particle.position;
        particle.stagnant = 0;
        particle.since_refresh = 0;
      } else {
        ++particle.stagnant;
        ++particle.since_refresh;
      }
      if (tracker.offer(batch[p], *costs[p])) global_best_position = particle.position;
    }
    if (done == 0) {
      tracker.mark_exhausted();
      break;
    }
    stagnation = tracker.best_cost() < prev_best ? 0 : stagnation + 1;
    tracker.end_iteration(it);
    if (done < n) {
      tracker.mark_exhausted();
      break;
    }

    for (std::size_t p = 0; p < n; ++p) {
      if (swarm[p].since_refresh >= params.exemplar_refresh) {
        refresh_exemplar(swarm, p, params.exemplar_probability, exemplar_rng);
        swarm[p].since_refresh = 0;
      }
    }

    const RlState next_state = state_features(current_positions(), global_best_position,
                                              progress(it), params.max_iter, stagnation);
    agent.remember({state, unit_action, reward(prev_best, tracker.best_cost()), next_state});
    agent.train_step(replay_rng);
    state = next_state;

    if (!params.iteration_cap && evaluator.meter().exhausted()) break;
  }
  return tracker.finish();
}

}  // namespace idcopt
