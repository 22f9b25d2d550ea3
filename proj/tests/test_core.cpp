#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "idcopt/diversity.hpp"
#include "idcopt/errors.hpp"
#include "idcopt/evaluator.hpp"
#include "idcopt/genome.hpp"
#include "idcopt/grid.hpp"
#include "idcopt/objectives.hpp"
#include "idcopt/parallel.hpp"
#include "idcopt/rng.hpp"
#include "idcopt/run_record.hpp"

using namespace idcopt;

TEST_CASE("splitmix64 and xoshiro256** match a reference implementation") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xe220a8397b1dcdafULL);

  RngStream rng(42);
  CHECK(rng.next_u64() == 0x15780b2e0c2ec716ULL);
  CHECK(rng.next_u64() == 0x6104d9866d113a7eULL);
  CHECK(rng.next_u64() == 0xae17533239e499a1ULL);
  CHECK(rng.draws() == 3);

  CHECK(fnv1a64("bpso/init") == 0xc275a846ed00f520ULL);
  CHECK(RngStream(42).derive("bpso/init").next_u64() == 0xc20f9b607221ca93ULL);
}

TEST_CASE("rng streams are reproducible and independent") {
  RngStream a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream root(7);
  CHECK(root.derive("x").next_u64() != root.derive("y").next_u64());
  CHECK(root.draws() == 0);  // deriving does not consume the parent

  RngStream u(3);
  for (int i = 0; i < 10000; ++i) {
    const double x = u.uniform();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
    const auto k = u.below(7);
    REQUIRE(k < 7);
  }
  CHECK_THROWS_AS(u.below(0), DomainError);
}

TEST_CASE("genome text round trip and validation") {
  const Genome g = Genome::from_text("0110\n");
  CHECK(g.size() == 4);
  CHECK(g.to_text() == "0110");
  CHECK(g.count_ones() == 2);
  CHECK_THROWS_AS(Genome::from_text("01x0"), EncodingError);

  const Genome h = Genome::from_index(0b1011, 4);
  CHECK(h.to_text() == "1101");
  CHECK(hamming_distance(g, h) == 3);
  CHECK_THROWS_AS(hamming_distance(g, Genome::zeros(5)), EncodingError);

  const std::vector<double> x{0.49, 0.5, 0.51, 0.0};
  CHECK(binarize(x).to_text() == "0110");

  RngStream rng(1);
  const Genome r = Genome::random(kDefaultDimension, rng);
  CHECK(r.size() == 96);
  for (auto b : r.bits()) CHECK((b == 0 || b == 1));
}

TEST_CASE("expand_genome examples") {
  CHECK(GridShape::full().free_cells() == 96);
  CHECK(GridShape::reduced().free_cells() == 8);

  const CellGrid ones = expand_genome(Genome::ones(96), Symmetry::mirror);
  for (std::size_t r = 0; r < 11; ++r)
    for (std::size_t c = 0; c < 16; ++c) CHECK(ones.at(r, c));

  Genome single = Genome::zeros(96);
  single.set(0, true);
  const CellGrid m = expand_genome(single, Symmetry::mirror);
  const CellGrid a = expand_genome(single, Symmetry::antisym);
  std::size_t set_m = 0, set_a = 0;
  for (std::size_t r = 0; r < 11; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      set_m += m.at(r, c);
      set_a += a.at(r, c);
    }
  }
  CHECK(set_m == 2);
  CHECK(m.at(0, 0));
  CHECK(m.at(10, 0));
  CHECK(set_a == 2);
  CHECK(a.at(0, 0));
  CHECK(a.at(10, 15));

  CHECK_THROWS_AS(expand_genome(Genome::zeros(95), Symmetry::mirror), EncodingError);
  CHECK_THROWS_AS(parse_symmetry("diagonal"), ConfigError);
}

TEST_CASE("symmetry holds and expansion is injective on random genomes") {
  RngStream rng(2024);
  for (const auto sym : {Symmetry::mirror, Symmetry::antisym}) {
    std::set<std::string> seen_genomes;
    std::set<std::vector<bool>> seen_grids;
    for (int i = 0; i < 1000; ++i) {
      const Genome g = Genome::random(96, rng);
      const CellGrid grid = expand_genome(g, sym);
      REQUIRE(grid.satisfies(sym));
      // Centre row (row 5) is free and must equal the genome's last 16 bits.
      for (std::size_t c = 0; c < 16; ++c) CHECK(grid.at(5, c) == g[5 * 16 + c]);
      std::vector<bool> flat;
      for (std::size_t r = 0; r < 11; ++r)
        for (std::size_t c = 0; c < 16; ++c) flat.push_back(grid.at(r, c));
      if (seen_genomes.insert(g.to_text()).second) CHECK(seen_grids.insert(flat).second);
    }
  }
}

TEST_CASE("evaluator cache and budget contract") {
  const OneMaxObjective onemax(8);
  Evaluator ev(onemax, 2);
  const Genome g = Genome::from_text("11110000");
  CHECK(ev.evaluate(g) == 4.0);
  CHECK(ev.evaluate(g) == 4.0);
  CHECK(ev.meter().evaluations_used == 1);
  CHECK(ev.meter().cache_hits == 1);
  CHECK(ev.evaluate(Genome::ones(8)) == 0.0);
  CHECK(ev.meter().exhausted());
  CHECK_THROWS_AS(ev.evaluate(Genome::zeros(8)), BudgetExhausted);
  CHECK(ev.evaluate(g) == 4.0);  // hits stay free after exhaustion
  CHECK(ev.meter().evaluations_used == 2);
  CHECK_THROWS_AS(ev.evaluate(Genome::zeros(7)), EncodingError);
}

TEST_CASE("evaluator without cache charges every call") {
  const OneMaxObjective onemax(4);
  Evaluator ev(onemax, 10, EvalOptions{false, Exec::serial});
  for (int i = 0; i < 3; ++i) ev.evaluate(Genome::zeros(4));
  CHECK(ev.meter().evaluations_used == 3);
  CHECK(ev.meter().cache_hits == 0);
}

TEST_CASE("batch evaluation: serial and OpenMP paths agree") {
  set_threads(4);
  const SurrogateObjective obj(SurrogateProfile::idc1500());
  RngStream rng(99);
  std::vector<Genome> batch;
  for (int i = 0; i < 200; ++i) batch.push_back(Genome::random(96, rng));
  // Duplicates inside the batch exercise the pending-miss path.
  for (int i = 0; i < 40; ++i) batch.push_back(batch[static_cast<std::size_t>(i * 3)]);

  for (std::size_t budget : {std::size_t{1000}, std::size_t{150}, std::size_t{0}}) {
    Evaluator serial(obj, budget, EvalOptions{true, Exec::serial});
    Evaluator parallel(obj, budget, EvalOptions{true, Exec::parallel});
    if (budget > 0) {  // warm one cache entry in both
      serial.evaluate(batch[5]);
      parallel.evaluate(batch[5]);
    }
    const auto a = serial.evaluate_batch(batch);
    const auto b = parallel.evaluate_batch(batch);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].has_value() == b[i].has_value());
      if (a[i]) CHECK(*a[i] == *b[i]);
    }
    CHECK(serial.meter().evaluations_used == parallel.meter().evaluations_used);
    CHECK(serial.meter().cache_hits == parallel.meter().cache_hits);
    CHECK(serial.meter().evaluations_used <= budget);
  }
}

TEST_CASE("swarm_diversity examples") {
  const std::vector<double> best{0, 0, 0, 0};
  std::vector<std::vector<double>> same{best, best};
  CHECK(swarm_diversity(same, best) == 0.0);

  std::vector<std::vector<double>> far{{1, 1, 1, 1}};
  CHECK(swarm_diversity(far, best) == doctest::Approx(1.0).epsilon(1e-15));

  std::vector<std::vector<double>> mixed{{0, 0, 0, 0}, {1, 1, 1, 1}};
  CHECK(swarm_diversity(mixed, best) == doctest::Approx(0.5).epsilon(1e-15));

  std::vector<std::vector<double>> empty;
  CHECK_THROWS_AS(swarm_diversity(empty, best), DomainError);
  std::vector<std::vector<double>> bad{{0, 0}};
  CHECK_THROWS_AS(swarm_diversity(bad, best), DomainError);
}

TEST_CASE("run tracker keeps the incumbent on ties and records iterations") {
  const OneMaxObjective onemax(4);
  Evaluator ev(onemax, 10);
  RunTracker t("x", 1, ev);
  CHECK_FALSE(t.has_best());
  CHECK(t.offer(Genome::from_text("0001"), 3.0));
  CHECK_FALSE(t.offer(Genome::from_text("0010"), 3.0));
  CHECK(t.best().to_text() == "0001");
  t.end_iteration(1);
  CHECK(t.offer(Genome::from_text("0011"), 2.0));
  t.end_iteration(2);
  const RunRecord r = t.finish();
  CHECK(r.iterations() == 2);
  CHECK(r.convergence_csv() == "iteration,evaluations,best_cost\n1,0,3\n2,0,2\n");
}
