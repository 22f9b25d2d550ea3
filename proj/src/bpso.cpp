#include "idcopt/bpso.hpp"

#include <algorithm>
#include <cmath>

#include "idcopt/errors.hpp"

namespace idcopt {

void BpsoParams::validate() const {
  if (swarm_size < 1) throw ConfigError("bpso.swarm", "swarm size must be at least 1");
  if (max_iter < 1) throw ConfigError("bpso.max_iter", "max_iter must be at least 1");
  if (!(e > d && d > 0)) throw ConfigError("bpso.e", "transfer factors need e > d > 0");
  if (v_clamp && !(*v_clamp > 0)) throw ConfigError("bpso.v_clamp", "v_clamp must be positive");
}

std::vector<double> velocity_update(std::span<const double> velocity, const Genome& position,
                                    const Genome& personal_best, const Genome& global_best,
                                    const BpsoParams& params, std::span<const double> r1,
                                    std::span<const double> r2) {
  const std::size_t n = velocity.size();
  if (position.size() != n || personal_best.size() != n || global_best.size() != n ||
      r1.size() != n || r2.size() != n) {
    throw DomainError("velocity_update: dimension mismatch");
  }
  std::vector<double> next(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = position[k];
    double v = params.w * velocity[k] + params.c1 * r1[k] * (personal_best[k] - x) +
               params.c2 * r2[k] * (global_best[k] - x);
    if (params.v_clamp) v = std::clamp(v, -*params.v_clamp, *params.v_clamp);
    next[k] = v;
  }
  return next;
}

double transfer_factor(std::size_t iteration, double e, double d) {
  if (iteration < 1) throw DomainError("transfer_factor: iteration must be >= 1");
  return e - (e - d) / static_cast<double>(iteration);
}

double transfer_function(double v, double a) {
  const double s = 2.0 / (1.0 + std::exp(-a * v));
  return v > 0 ? s - 1.0 : 1.0 - s;
}

Genome position_update(const Genome& position, std::span<const double> tf,
                       std::span<const double> r) {
  if (tf.size() != position.size() || r.size() != position.size()) {
    throw DomainError("position_update: dimension mismatch");
  }
  Genome next = position;
  for (std::size_t k = 0; k < position.size(); ++k) {
    if (tf[k] > r[k]) next.flip(k);
  }
  return next;
}

RunRecord run_bpso(const BpsoParams& params, Evaluator& evaluator, std::uint64_t seed) {
  params.validate();
  const std::size_t dim = evaluator.dimension();
  const std::size_t n = params.swarm_size;
  RngStream root(seed);
  RngStream init_rng = root.derive("bpso/init");
  RngStream velocity_rng = root.derive("bpso/velocity");
  RngStream position_rng = root.derive("bpso/position");
  RunTracker tracker("bpso", seed, evaluator);

  std::vector<ParticleState> swarm(n);
  std::vector<Genome> batch(n);
  for (std::size_t p = 0; p < n; ++p) {
    swarm[p].position = Genome::random(dim, init_rng);
    swarm[p].velocity.resize(dim);
    for (auto& v : swarm[p].velocity) v = init_rng.uniform(-1.0, 1.0);
    batch[p] = swarm[p].position;
  }

  auto costs = evaluator.evaluate_batch(batch);
  std::size_t alive = n;
  for (std::size_t p = 0; p < n; ++p) {
    if (!costs[p]) {
      alive = p;
      break;
    }
    swarm[p].best_position = swarm[p].position;
    swarm[p].best_cost = *costs[p];
    tracker.offer(swarm[p].position, *costs[p]);
  }
  if (alive < n) {
    // Budget too small for the initial swarm: report what was seen.
    tracker.mark_exhausted();
    return tracker.finish();
  }

  std::vector<double> r1(dim), r2(dim), tf(dim), r(dim);
  for (std::size_t it = 1; it <= params.max_iter; ++it) {
    const Genome global_best = tracker.best();
    const double a = transfer_factor(it, params.e, params.d);
    for (std::size_t p = 0; p < n; ++p) {
      auto& particle = swarm[p];
      for (std::size_t k = 0; k < dim; ++k) {
        r1[k] = velocity_rng.uniform();
        r2[k] = velocity_rng.uniform();
      }
      particle.velocity = velocity_update(particle.velocity, particle.position,
                                          particle.best_position, global_best, params, r1, r2);
      for (std::size_t k = 0; k < dim; ++k) {
        tf[k] = transfer_function(particle.velocity[k], a);
        r[k] = position_rng.uniform();
      }
      particle.position = position_update(particle.position, tf, r);
      batch[p] = particle.position;
    }

    costs = evaluator.evaluate_batch(batch);
    std::size_t done = 0;
    for (std::size_t p = 0; p < n && costs[p]; ++p, ++done) {
      auto& particle = swarm[p];
      if (*costs[p] < particle.best_cost) {
        particle.best_cost = *costs[p];
        particle.best_position = particle.position;
      }
      tracker.offer(particle.position, *costs[p]);
    }
    if (done > 0) tracker.end_iteration(it);
    if (done < n) {
      tracker.mark_exhausted();
      break;
    }
  }
  return tracker.finish();
}

}  // namespace idcopt
