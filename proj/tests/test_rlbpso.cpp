#include <algorithm>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "idcopt/actor_critic.hpp"
#include "idcopt/errors.hpp"
#include "idcopt/objectives.hpp"
#include "idcopt/rlbpso.hpp"

using namespace idcopt;

namespace {

ActorCritic small_agent(ActorCriticConfig cfg = {}, std::uint64_t seed = 3) {
  RngStream w(seed);
  return ActorCritic(cfg, w);
}

}  // namespace

TEST_CASE("state features examples") {
  const std::vector<std::vector<double>> collapsed(4, std::vector<double>(6, 0.25));
  const std::vector<double> best(6, 0.25);
  const RlState s0 = state_features(collapsed, best, 0, 25, 0);
  CHECK(s0.iter_pct == 0.0);
  CHECK(s0.diversity == 0.0);
  CHECK(s0.stagnation_pct == 0.0);
  CHECK(state_features(collapsed, best, 25, 25, 0).iter_pct == 1.0);
  CHECK(state_features(collapsed, best, 3, 20, 10).stagnation_pct == 0.5);
  const RlState clipped = state_features(collapsed, best, 40, 25, 99);
  CHECK(clipped.iter_pct == 1.0);
  CHECK(clipped.stagnation_pct == 1.0);
}

TEST_CASE("actions stay in range and the zero actor sits at midpoints") {
  RlbpsoParams p;
  ActorCritic agent = small_agent();
  RngStream noise(11);
  RngStream states(12);
  for (int i = 0; i < 500; ++i) {
    const RlState s{states.uniform(), states.uniform(), states.uniform()};
    const auto gp = decode_actions(agent.act(s, 3.0 * states.uniform(), noise), p);
    REQUIRE(gp.size() == 5);
    for (const auto& g : gp) {
      REQUIRE(p.w.contains(g.w));
      REQUIRE(p.c1.contains(g.c1));
      REQUIRE(p.c2.contains(g.c2));
      REQUIRE(p.c3.contains(g.c3));
      REQUIRE(p.c4.contains(g.c4));
    }
  }

  const RlState s{0.3, 0.2, 0.1};
  RngStream n1(1), n2(2);
  CHECK(agent.act(s, 0.0, n1) == agent.act(s, 0.0, n2));

  agent.zero_actor();
  for (const auto& g : decode_actions(agent.act(s, 0.0, n1), p)) {
    CHECK(g.w == doctest::Approx(0.7));
    CHECK(g.c1 == doctest::Approx(1.5));
    CHECK(g.c2 == doctest::Approx(1.5));
    CHECK(g.c3 == doctest::Approx(1.5));
    CHECK(g.c4 == doctest::Approx(0.5));
  }
  CHECK_THROWS_AS(decode_actions(std::vector<double>(24, 0.5), p), DomainError);
}

TEST_CASE("group assignment") {
  CHECK(group_of(0, 25, 5) == 0);
  CHECK(group_of(4, 25, 5) == 0);
  CHECK(group_of(5, 25, 5) == 1);
  CHECK(group_of(24, 25, 5) == 4);
  CHECK(group_of(26, 27, 5) == 4);  // leftovers join the last group
  CHECK(group_of(2, 3, 5) == 2);
}

TEST_CASE("rl_velocity_update examples") {
  const std::vector<double> v{0.1, -0.2};
  const std::vector<double> x{0.4, 0.6};
  const std::vector<double> ones(2, 1.0), zeros(2, 0.0);
  const GroupParams gp{0.7, 1.3, 1.1, 0.9, 0.0};
  const auto same = rl_velocity_update(v, x, x, x, x, gp, 10.0, ones, ones, ones);
  CHECK(same[0] == doctest::Approx(0.07));
  CHECK(same[1] == doctest::Approx(-0.14));

  const GroupParams unit{1, 1, 1, 1, 0};
  for (double d : rl_velocity_update(zeros, zeros, ones, ones, ones, unit, 10.0, ones, ones, ones))
    CHECK(d == 3.0);
  for (double d : rl_velocity_update(zeros, zeros, ones, ones, ones, unit, 1.0, ones, ones, ones))
    CHECK(d == 1.0);

  const GroupParams inertia{0.5, 0, 0, 0, 0};
  const auto w_only = rl_velocity_update(v, x, ones, zeros, ones, inertia, 10.0, ones, ones, ones);
  CHECK(w_only[0] == doctest::Approx(0.05));
  CHECK_THROWS_AS(rl_velocity_update(v, ones, ones, ones, std::vector<double>(3), gp, 1.0, ones,
                                     ones, ones),
                  DomainError);
}

TEST_CASE("reinit check frequencies") {
  RngStream rng(77);
  int reinit = 0;
  for (int i = 0; i < 100000; ++i) {
    CHECK_FALSE(reinit_check(1.0, false, rng) == MoveKind::reinitialize);
    CHECK_FALSE(reinit_check(0.0, true, rng) == MoveKind::reinitialize);
    reinit += reinit_check(1.0, true, rng) == MoveKind::reinitialize;
  }
  CHECK(reinit / 1e5 == doctest::Approx(0.01).epsilon(0.2));  // +-0.002 absolute
  CHECK(std::abs(reinit / 1e5 - 0.01) <= 0.002);
}

TEST_CASE("apply_move") {
  RlParticle p;
  p.position = {0.9, 0.1, 0.5};
  p.velocity = {0.5, -0.5, 0.25};
  p.best_position = {1, 1, 1};
  RngStream rng(4);
  apply_move(p, MoveKind::step, rng);
  CHECK(p.position == std::vector<double>{1.0, 0.0, 0.75});
  apply_move(p, MoveKind::reinitialize, rng);
  CHECK(p.velocity == std::vector<double>{0, 0, 0});
  CHECK(p.best_position == std::vector<double>{1, 1, 1});
  for (double x : p.position) CHECK((x >= 0.0 && x < 1.0));
}

TEST_CASE("reward examples") {
  CHECK(reward(10.0, 10.0) == -0.01);
  CHECK(reward(10.0, 12.0) == -0.01);
  CHECK(reward(10.0, 5.0) == 0.5);
}

TEST_CASE("train_step: gating, frozen learning rates and finiteness") {
  ActorCriticConfig cfg;
  cfg.batch_size = 4;
  ActorCritic agent = small_agent(cfg);
  RngStream replay(8);
  CHECK_FALSE(agent.train_step(replay));

  ActorCriticConfig frozen = cfg;
  frozen.actor_lr = 0;
  frozen.critic_lr = 0;
  ActorCritic still = small_agent(frozen);
  const auto actor_before = still.actor();
  const auto critic_before = still.critic();
  RngStream data(9);
  for (int i = 0; i < 8; ++i) {
    const RlState s{data.uniform(), data.uniform(), data.uniform()};
    still.remember({s, still.policy(s), data.uniform(-1, 1), s});
  }
  CHECK(still.train_step(replay));
  CHECK(still.actor() == actor_before);
  CHECK(still.critic() == critic_before);

  for (int i = 0; i < 2000; ++i) {
    const RlState s{data.uniform(), data.uniform(), data.uniform()};
    const RlState s2{data.uniform(), data.uniform(), data.uniform()};
    agent.remember({s, agent.act(s, 0.3, data), data.uniform(-1, 1), s2});
    agent.train_step(replay);
    REQUIRE(agent.finite());
  }
  CHECK(agent.replay_size() == cfg.replay_capacity);
}

TEST_CASE("critic value rises monotonically on a repeated rewarding transition") {
  ActorCriticConfig cfg;
  cfg.batch_size = 1;
  cfg.replay_capacity = 1;
  cfg.actor_lr = 0;  // frozen actor
  ActorCritic agent = small_agent(cfg, 21);
  const RlState s{0.4, 0.3, 0.2};
  const auto a = agent.policy(s);
  agent.remember({s, a, 1.0, s});
  RngStream replay(1);
  double prev = agent.q_value(s, a);
  for (int step = 0; step < 15; ++step) {
    REQUIRE(agent.train_step(replay));
    const double q = agent.q_value(s, a);
    CHECK(q > prev);
    CHECK(q < 1.0 / (1.0 - cfg.gamma));
    prev = q;
  }
}

TEST_CASE("weight snapshot round trip") {
  ActorCritic a = small_agent({}, 5);
  std::stringstream buf;
  a.save(buf);
  CHECK(buf.str().rfind("# idcopt actor-critic weights v1\n", 0) == 0);
  ActorCritic b = small_agent({}, 6);
  CHECK_FALSE(a.actor() == b.actor());
  b.load(buf);
  CHECK(a.actor() == b.actor());
  CHECK(a.critic() == b.critic());

  ActorCriticConfig other;
  other.hidden = 8;
  ActorCritic c = small_agent(other);
  std::stringstream buf2;
  a.save(buf2);
  CHECK_THROWS_AS(c.load(buf2), ConfigError);
}

TEST_CASE("run_rlbpso: determinism, budget and constant objective") {
  const SurrogateObjective obj(SurrogateProfile::idc1500());
  RlbpsoParams p;
  for (std::size_t budget : {std::size_t{10}, std::size_t{300}, std::size_t{650}}) {
    Evaluator a(obj, budget), b(obj, budget);
    const RunRecord ra = run_rlbpso(p, a, 42);
    const RunRecord rb = run_rlbpso(p, b, 42);
    CHECK(ra.convergence_csv() == rb.convergence_csv());
    CHECK(ra.best == rb.best);
    CHECK(ra.evaluations <= budget);
    CHECK(ra.evaluations <= p.swarm_size * (p.max_iter + 1));
    for (std::size_t i = 1; i < ra.entries.size(); ++i)
      CHECK(ra.entries[i].best_cost <= ra.entries[i - 1].best_cost);
  }

  const ConstantObjective c(12, 2.0);
  Evaluator ev(c, 100000);
  const RunRecord rc = run_rlbpso(p, ev, 3);
  CHECK(rc.best_cost == 2.0);
  CHECK(rc.iterations() == p.max_iter);

  // Budget-driven mode keeps going past max_iter until the budget is spent.
  RlbpsoParams budget_mode = p;
  budget_mode.iteration_cap = false;
  const OneMaxObjective om(96);
  Evaluator eb(om, 1000);
  const RunRecord rbm = run_rlbpso(budget_mode, eb, 5);
  CHECK(rbm.evaluations == 1000);
  CHECK(rbm.iterations() > p.max_iter);
}

TEST_CASE("rlbpso with fixed parameters reduces to a continuous PSO") {
  RlbpsoParams p;
  p.swarm_size = 7;
  p.max_iter = 15;
  p.zero_actor = true;
  p.network.actor_lr = 0;
  p.network.critic_lr = 0;
  p.noise_start = 0;
  p.noise_end = 0;
  p.w = {0.7, 0.7};
  p.c1 = {1.4, 1.4};
  p.c2 = {1.6, 1.6};
  p.c3 = {0, 0};
  p.c4 = {0, 0};
  p.exemplar_probability = 0;

  const std::size_t dim = 20;
  const OneMaxObjective obj(dim);
  const std::uint64_t seed = 13;
  Evaluator ev(obj, 100000, EvalOptions{false, Exec::serial});
  const RunRecord rec = run_rlbpso(p, ev, seed);

  // Reference: plain continuous PSO drawing from the same named streams.
  RngStream root(seed);
  RngStream init = root.derive("rlbpso/init");
  RngStream vel = root.derive("rlbpso/velocity");
  const std::size_t n = p.swarm_size;
  std::vector<std::vector<double>> x(n), v(n), pb(n);
  std::vector<double> pc(n), gb;
  double gc = 1e300;
  for (std::size_t i = 0; i < n; ++i) {
    x[i].resize(dim);
    v[i].resize(dim);
    for (auto& xi : x[i]) xi = init.uniform();
    for (auto& vi : v[i]) vi = init.uniform(-p.v_clamp, p.v_clamp);
    pb[i] = x[i];
    pc[i] = onemax_cost(binarize(x[i]));
    if (pc[i] < gc) {
      gc = pc[i];
      gb = x[i];
    }
  }
  std::vector<double> ref_best;
  for (std::size_t it = 1; it <= p.max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < dim; ++d) {
        const double r1 = vel.uniform(), r2 = vel.uniform();
        vel.uniform();  // r3, multiplied by c3 = 0
        const double nv = 0.7 * v[i][d] + 1.4 * r1 * (pb[i][d] - x[i][d]) +
                          1.6 * r2 * (gb[d] - x[i][d]);
        v[i][d] = std::clamp(nv, -p.v_clamp, p.v_clamp);
        x[i][d] = std::clamp(x[i][d] + v[i][d], 0.0, 1.0);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double c = onemax_cost(binarize(x[i]));
      if (c < pc[i]) {
        pc[i] = c;
        pb[i] = x[i];
      }
      if (c < gc) {
        gc = c;
        gb = x[i];
      }
    }
    ref_best.push_back(gc);
  }

  REQUIRE(rec.entries.size() == ref_best.size());
  for (std::size_t i = 0; i < ref_best.size(); ++i) CHECK(rec.entries[i].best_cost == ref_best[i]);
  CHECK(rec.best == binarize(gb));
}

TEST_CASE("rlbpso parameter validation") {
  RlbpsoParams p;
  p.groups = 4;  // action size no longer 5 x groups
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = RlbpsoParams{};
  p.w = {1.0, 0.4};
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = RlbpsoParams{};
  p.exemplar_probability = 1.5;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}
