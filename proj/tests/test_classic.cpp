#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "idcopt/classic.hpp"
#include "idcopt/errors.hpp"
#include "idcopt/objectives.hpp"

using namespace idcopt;

namespace {

bool monotone(const RunRecord& r) {
  for (std::size_t i = 1; i < r.entries.size(); ++i) {
    if (r.entries[i].best_cost > r.entries[i - 1].best_cost) return false;
  }
  return true;
}

template <typename Params, typename Run>
void check_common(const Params& params, Run run) {
  const SurrogateObjective obj(SurrogateProfile::idc1500());
  for (std::size_t budget : {std::size_t{5}, std::size_t{200}, std::size_t{650}}) {
    Evaluator a(obj, budget), b(obj, budget);
    const RunRecord ra = run(params, a, 17);
    const RunRecord rb = run(params, b, 17);
    CHECK(ra.convergence_csv() == rb.convergence_csv());
    CHECK(ra.best == rb.best);
    CHECK(ra.evaluations <= budget);
    CHECK(monotone(ra));
  }
}

}  // namespace

// ---------------------------------------------------------------- SA

TEST_CASE("sa mutations") {
  RngStream rng(1);
  const Genome z = Genome::zeros(96);
  const Genome m = sa_random_mutation(z, rng);
  CHECK(m.count_ones() == 1);
  CHECK(hamming_distance(m, z) == 1);

  for (int i = 0; i < 1000; ++i) {
    const Genome g = Genome::random(96, rng);
    const Genome s = sa_swap_mutation(g, rng);
    REQUIRE(s.count_ones() == g.count_ones());
    if (g.count_ones() != 0 && g.count_ones() != 96) CHECK(hamming_distance(g, s) == 2);
  }
  CHECK(sa_swap_mutation(Genome::ones(96), rng).count_ones() == 95);
  CHECK(sa_swap_mutation(Genome::zeros(96), rng).count_ones() == 1);
}

TEST_CASE("sa acceptance values and Monte Carlo frequency") {
  CHECK(sa_accept(0.0, 1.0) == 1.0);
  CHECK(sa_accept(-3.0, 1.0) == 1.0);
  CHECK(sa_accept(1.0, 1.0) == doctest::Approx(0.367879441171442321).epsilon(1e-14));
  CHECK(sa_accept(2.5, 2.5) == doctest::Approx(0.367879441171442321).epsilon(1e-14));
  CHECK(sa_accept(1.0, 1e-300) == 0.0);
  CHECK(sa_accept(1.0, 1e12) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK_THROWS_AS(sa_accept(1.0, 0.0), DomainError);

  RngStream rng(2);
  int accepted = 0;
  for (int i = 0; i < 100000; ++i) accepted += rng.uniform() < sa_accept(1.0, 1.0);
  CHECK(std::abs(accepted / 1e5 - 0.368) <= 0.02);
}

TEST_CASE("run_sa: determinism, budget, monotone best") {
  SaParams p;
  check_common(p, run_sa);
  p.mutation = Mutation::swap;
  check_common(p, run_sa);
  p.t0 = 5.0;
  check_common(p, run_sa);
}

TEST_CASE("run_sa evaluation count") {
  const ConstantObjective c(16, 1.0);
  Evaluator ev(c, 100000, EvalOptions{false, Exec::serial});
  const RunRecord r = run_sa(SaParams{}, ev, 1);
  CHECK(r.evaluations == 1 + 20 + 100);
  SaParams fixed;
  fixed.t0 = 1.0;
  Evaluator ev2(c, 100000, EvalOptions{false, Exec::serial});
  CHECK(run_sa(fixed, ev2, 1).evaluations == 1 + 100);
}

// ---------------------------------------------------------------- ABC

TEST_CASE("abc selection probabilities") {
  const auto eq = abc_selection_probs(std::vector<double>{3.0, 3.0});
  CHECK(eq[0] == 0.5);
  CHECK(eq[1] == 0.5);
  const auto p = abc_selection_probs(std::vector<double>{0.0, 1.0});
  CHECK(p[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(abc_selection_probs(std::vector<double>{7.0})[0] == 1.0);
  CHECK_THROWS_AS(abc_selection_probs(std::vector<double>{}), DomainError);

  RngStream rng(3);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> costs(1 + rng.below(50));
    for (auto& c : costs) c = rng.uniform(0, 1e4);
    const auto probs = abc_selection_probs(costs);
    REQUIRE(std::abs(std::accumulate(probs.begin(), probs.end(), 0.0) - 1.0) <= 1e-12);
  }
}

TEST_CASE("abc with limit 1 on a constant objective rescouts every source each iteration") {
  const ConstantObjective c(16, 1.0);
  AbcParams p;
  p.limit = 1;
  Evaluator ev(c, 1000000, EvalOptions{false, Exec::serial});
  const RunRecord r = run_abc(p, ev, 4);
  CHECK(r.evaluations == p.employed + p.max_iter * (2 * p.employed + p.onlookers));
}

TEST_CASE("abc solves OneMax-8 in at least 19 of 20 seeds") {
  const OneMaxObjective obj(8);
  int hits = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Evaluator ev(obj, 100000);
    hits += run_abc(AbcParams{}, ev, s).best_cost == 0.0;
  }
  CHECK(hits >= 19);
}

TEST_CASE("run_abc: determinism, budget, monotone best, validation") {
  check_common(AbcParams{}, run_abc);
  AbcParams bad;
  bad.employed = 30;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

// ---------------------------------------------------------------- ACO

TEST_CASE("aco construction probabilities") {
  PheromoneTable t(3, 1.0);
  CHECK(t.prob_one(0) == 0.5);
  t.tau[1] = {1.0, 3.0};
  CHECK(t.prob_one(1) == 0.75);
  t.tau[2] = {t.tau_max, t.tau_min};
  CHECK(t.prob_one(2) > 0.0);
  CHECK(t.prob_one(2) < 0.01);

  RngStream rng(5);
  int ones = 0;
  for (int i = 0; i < 20000; ++i) ones += aco_construct(t, rng)[1];
  CHECK(std::abs(ones / 20000.0 - 0.75) < 0.015);
}

TEST_CASE("aco deposit examples") {
  AcoParams p;
  PheromoneTable t = p.make_table(4);
  aco_deposit(t, {}, {}, nullptr, 0.0);
  for (const auto& e : t.tau) {
    CHECK(e[0] == doctest::Approx(0.9));
    CHECK(e[1] == doctest::Approx(0.9));
  }

  PheromoneTable u = p.make_table(4);
  const std::vector<Genome> sol{Genome::from_text("1010")};
  const std::vector<double> cost{0.0};
  aco_deposit(u, sol, cost, nullptr, 0.0);
  CHECK(u.tau[0][1] == doctest::Approx(0.9 + 1.0));
  CHECK(u.tau[0][0] == doctest::Approx(0.9));
  CHECK(u.tau[1][0] == doctest::Approx(0.9 + 1.0));

  PheromoneTable e = p.make_table(4);
  const Genome elite = Genome::from_text("1111");
  aco_deposit(e, {}, {}, &elite, 1.0);
  CHECK(e.tau[2][1] == doctest::Approx(0.9 + 0.5));
}

TEST_CASE("pheromone stays within bounds under 10^4 random updates") {
  AcoParams p;
  PheromoneTable t = p.make_table(16);
  RngStream rng(6);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Genome> sols(rng.below(6));
    std::vector<double> costs(sols.size());
    for (std::size_t k = 0; k < sols.size(); ++k) {
      sols[k] = Genome::random(16, rng);
      costs[k] = rng.uniform() < 0.3 ? 0.0 : rng.uniform(0, 100);
    }
    const Genome elite = Genome::random(16, rng);
    aco_deposit(t, sols, costs, rng.coin() ? &elite : nullptr, rng.uniform(0, 3));
    REQUIRE(t.within_bounds());
    for (std::size_t d = 0; d < 16; ++d) {
      REQUIRE(t.prob_one(d) > 0.0);
      REQUIRE(t.prob_one(d) < 1.0);
    }
  }
}

TEST_CASE("run_aco: determinism, budget, monotone best, count") {
  check_common(AcoParams{}, run_aco);
  const ConstantObjective c(16, 1.0);
  Evaluator ev(c, 100000, EvalOptions{false, Exec::serial});
  AcoParams p;
  CHECK(run_aco(p, ev, 1).evaluations == p.ants * (p.max_iter + 1));
}

// ---------------------------------------------------------------- ALO

TEST_CASE("alo random walk normalization") {
  const std::vector<int> up(10, 1), down(10, -1);
  const auto wu = normalize_walk(up);
  CHECK(std::is_sorted(wu.begin(), wu.end()));
  CHECK(wu.back() == 1.0);
  CHECK(wu.front() == 0.0);
  CHECK(normalize_walk(down).back() == 0.0);
  CHECK(normalize_walk(std::vector<int>{1}).front() == 0.5);
  CHECK_THROWS_AS(normalize_walk(std::vector<int>{}), DomainError);

  RngStream rng(8);
  CHECK_THROWS_AS(alo_random_walk(0, rng), DomainError);
  for (int i = 0; i < 500; ++i) {
    for (double v : alo_random_walk(1 + rng.below(60), rng)) REQUIRE((v >= 0.0 && v <= 1.0));
  }
}

TEST_CASE("alo roulette favours cheaper antlions in proportion to 1/(1+cost)") {
  RngStream rng(9);
  const std::vector<double> costs{0.0, 1.0, 3.0};
  std::vector<int> hits(3, 0);
  for (int i = 0; i < 70000; ++i) ++hits[alo_roulette(costs, rng)];
  // weights 1, 1/2, 1/4 -> 4/7, 2/7, 1/7
  CHECK(std::abs(hits[0] / 70000.0 - 4.0 / 7) < 0.01);
  CHECK(std::abs(hits[1] / 70000.0 - 2.0 / 7) < 0.01);
  CHECK(std::abs(hits[2] / 70000.0 - 1.0 / 7) < 0.01);
}

TEST_CASE("alo shrink ratio steps") {
  CHECK(alo_shrink_ratio(1, 100) == 1.0);
  CHECK(alo_shrink_ratio(20, 100) == doctest::Approx(100 * 0.2));
  CHECK(alo_shrink_ratio(60, 100) == doctest::Approx(1000 * 0.6));
  CHECK(alo_shrink_ratio(96, 100) == doctest::Approx(1e6 * 0.96));
  double prev = 0;
  for (std::size_t t = 1; t <= 100; ++t) {
    const double r = alo_shrink_ratio(t, 100);
    CHECK(r >= 1.0);
    CHECK(r >= prev);
    prev = r;
  }
}

TEST_CASE("run_alo: determinism, budget, monotone best, count") {
  check_common(AloParams{}, run_alo);
  const ConstantObjective c(16, 1.0);
  Evaluator ev(c, 100000, EvalOptions{false, Exec::serial});
  AloParams p;
  CHECK(run_alo(p, ev, 1).evaluations == p.population * (p.max_iter + 1));
}
