#include <algorithm>
#include <cmath>
#include <numeric>

#include "idcopt/classic.hpp"
#include "idcopt/errors.hpp"

namespace idcopt {

void AloParams::validate() const {
  if (population < 1) throw ConfigError("alo.population", "need at least one antlion");
  if (max_iter < 1) throw ConfigError("alo.max_iter", "max_iter must be at least 1");
}

std::vector<double> normalize_walk(std::span<const int> steps) {
  if (steps.empty()) throw DomainError("alo_random_walk: steps must be >= 1");
  std::vector<double> walk(steps.size());
  double pos = 0.0;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    pos += steps[t];
    walk[t] = pos;
  }
  const auto [lo, hi] = std::minmax_element(walk.begin(), walk.end());
  const double a = *lo;
  const double b = *hi;
  for (auto& v : walk) v = b > a ? (v - a) / (b - a) : 0.5;
  return walk;
}

std::vector<double> alo_random_walk(std::size_t steps, RngStream& rng) {
  if (steps == 0) throw DomainError("alo_random_walk: steps must be >= 1");
  std::vector<int> s(steps);
  for (auto& v : s) v = rng.coin() ? 1 : -1;
  return normalize_walk(s);
}

std::size_t alo_roulette(std::span<const double> costs, RngStream& rng) {
  if (costs.empty()) throw DomainError("alo_roulette: no candidates");
  double total = 0.0;
  for (double c : costs) total += 1.0 / (1.0 + c);
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    acc += 1.0 / (1.0 + costs[i]);
    if (u < acc) return i;
  }
  return costs.size() - 1;
}

double alo_shrink_ratio(std::size_t iteration, std::size_t max_iter) {
  const double t = static_cast<double>(iteration);
  const double T = static_cast<double>(max_iter);
  int w = 0;
  if (t > 0.95 * T) {
    w = 6;
  } else if (t > 0.9 * T) {
    w = 5;
  } else if (t > 0.75 * T) {
    w = 4;
  } else if (t > 0.5 * T) {
    w = 3;
  } else if (t > 0.1 * T) {
    w = 2;
  }
  if (w == 0) return 1.0;
  return std::max(1.0, std::pow(10.0, w) * t / T);
}

namespace {

struct Antlion {
  std::vector<double> position;
  Genome genome;
  double cost = 0.0;
};

/// Coordinate of a walk around `centre` inside the box [centre, centre +- 1/I].
double walk_around(double centre, double ratio, double unit_walk, RngStream& rng) {
  const double reach = (rng.coin() ? 1.0 : -1.0) / ratio;
  const double lo = std::min(centre, centre + reach);
  const double hi = std::max(centre, centre + reach);
  return lo + unit_walk * (hi - lo);
}

}  // namespace

RunRecord run_alo(const AloParams& params, Evaluator& evaluator, std::uint64_t seed) {
  params.validate();
  const std::size_t dim = evaluator.dimension();
  const std::size_t n = params.population;
  RngStream root(seed);
  RngStream init_rng = root.derive("alo/init");
  RngStream select_rng = root.derive("alo/select");
  RngStream walk_rng = root.derive("alo/walk");
  RunTracker tracker("alo", seed, evaluator);

  std::vector<Antlion> lions(n);
  std::vector<Genome> batch(n);
  for (std::size_t i = 0; i < n; ++i) {
    lions[i].position.resize(dim);
    for (auto& x : lions[i].position) x = init_rng.uniform();
    lions[i].genome = binarize(lions[i].position);
    batch[i] = lions[i].genome;
  }
  auto results = evaluator.evaluate_batch(batch);
  for (std::size_t i = 0; i < n; ++i) {
    if (!results[i]) {
      tracker.mark_exhausted();
      return tracker.finish();
    }
    lions[i].cost = *results[i];
  }
  std::stable_sort(lions.begin(), lions.end(),
                   [](const Antlion& a, const Antlion& b) { return a.cost < b.cost; });
  Antlion elite = lions.front();
  tracker.offer(elite.genome, elite.cost);

  std::vector<Antlion> ants(n);
  std::vector<double> lion_costs(n);
  for (std::size_t it = 1; it <= params.max_iter; ++it) {
    const double ratio = alo_shrink_ratio(it, params.max_iter);
    const std::size_t step = it - 1;
    for (std::size_t i = 0; i < n; ++i) lion_costs[i] = lions[i].cost;

    for (std::size_t k = 0; k < n; ++k) {
      const Antlion& trap = lions[alo_roulette(lion_costs, select_rng)];
      auto& ant = ants[k];
      ant.position.resize(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        const double around_trap = walk_around(
            trap.position[d], ratio, alo_random_walk(params.max_iter, walk_rng)[step], walk_rng);
        const double around_elite = walk_around(
            elite.position[d], ratio, alo_random_walk(params.max_iter, walk_rng)[step], walk_rng);
        ant.position[d] = std::clamp(0.5 * (around_trap + around_elite), 0.0, 1.0);
      }
      ant.genome = binarize(ant.position);
      batch[k] = ant.genome;
    }

    results = evaluator.evaluate_batch(batch);
    std::size_t done = 0;
    for (; done < n && results[done]; ++done) {
      ants[done].cost = *results[done];
      tracker.offer(ants[done].genome, ants[done].cost);
    }

    // Merge antlions with the evaluated ants and keep the best n; on equal
    // cost the incumbent antlion stays ahead.
    std::vector<Antlion> merged = lions;
    merged.insert(merged.end(), ants.begin(), ants.begin() + static_cast<std::ptrdiff_t>(done));
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Antlion& a, const Antlion& b) { return a.cost < b.cost; });
    merged.resize(n);
    lions = std::move(merged);
    if (lions.front().cost < elite.cost) elite = lions.front();

    if (done > 0) tracker.end_iteration(it);
    if (done < n) {
      tracker.mark_exhausted();
      break;
    }
  }
  return tracker.finish();
}

}  // namespace idcopt
