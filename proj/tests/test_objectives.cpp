#include <cmath>
#include <numbers>

#include "doctest.h"
#include "idcopt/errors.hpp"
#include "idcopt/objectives.hpp"
#include "idcopt/rng.hpp"

using namespace idcopt;

namespace {

// Independent count: enumerate every unordered cell pair and keep the
// 4-neighbour pairs whose values differ.
std::size_t fringe_by_pairs(const CellGrid& g) {
  const std::size_t n = g.rows() * g.cols();
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto ra = a / g.cols(), ca = a % g.cols();
      const auto rb = b / g.cols(), cb = b % g.cols();
      const auto dr = ra > rb ? ra - rb : rb - ra;
      const auto dc = ca > cb ? ca - cb : cb - ca;
      if (dr + dc == 1 && g.at(ra, ca) != g.at(rb, cb)) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("fringe_edges examples") {
  CHECK(fringe_edges(expand_genome(Genome::zeros(96), Symmetry::mirror)) == 0);
  CHECK(fringe_edges(expand_genome(Genome::ones(96), Symmetry::mirror)) == 0);
  Genome single = Genome::zeros(96);
  single.set(0, true);
  CHECK(fringe_edges(expand_genome(single, Symmetry::mirror)) == 4);
}

TEST_CASE("fringe_edges agrees with pair enumeration and ignores complement") {
  RngStream rng(5);
  for (int i = 0; i < 200; ++i) {
    const Genome g = Genome::random(96, rng);
    Genome inv = g;
    for (std::size_t k = 0; k < inv.size(); ++k) inv.flip(k);
    for (const auto sym : {Symmetry::mirror, Symmetry::antisym}) {
      const CellGrid grid = expand_genome(g, sym);
      REQUIRE(fringe_edges(grid) == fringe_by_pairs(grid));
      CHECK(fringe_edges(expand_genome(inv, sym)) == fringe_edges(grid));
    }
  }
}

TEST_CASE("resonant_frequency examples") {
  CHECK(resonant_frequency(1e-12, 10e-9) == doctest::Approx(1591549430.918953).epsilon(1e-12));
  const double f = resonant_frequency(2e-12, 3e-9);
  CHECK(resonant_frequency(8e-12, 3e-9) == doctest::Approx(f / 2).epsilon(1e-14));
  CHECK(resonant_frequency(1.0 / (4 * std::numbers::pi * std::numbers::pi), 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(resonant_frequency(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(resonant_frequency(1.0, -1.0), DomainError);
}

TEST_CASE("surrogate cost golden values") {
  const auto p = SurrogateProfile::idc1500();
  // Empty pattern: zero shift, penalty f_ref / delta_min.
  CHECK(surrogate_cost(Genome::zeros(96), p) == doctest::Approx(1591549.4309189534).epsilon(1e-12));
  CHECK(surrogate_cost(Genome::ones(96), p) == surrogate_cost(Genome::zeros(96), p));

  const auto r = SurrogateProfile::reduced();
  CHECK(surrogate_cost(Genome::from_text("01011010"), r) ==
        doctest::Approx(62.31948537939424).epsilon(1e-12));
  CHECK(surrogate_cost(Genome::from_text("10100101"), r) ==
        doctest::Approx(62.31948537939424).epsilon(1e-12));
  auto ra = r;
  ra.symmetry = Symmetry::antisym;
  CHECK(surrogate_cost(Genome::from_text("01101001"), ra) ==
        doctest::Approx(74.92521235182714).epsilon(1e-12));
}

TEST_CASE("surrogate cost is strictly decreasing in fringe edges (reduced, exhaustive)") {
  for (const auto sym : {Symmetry::mirror, Symmetry::antisym}) {
    auto p = SurrogateProfile::reduced();
    p.symmetry = sym;
    std::vector<std::pair<std::size_t, double>> pts;
    for (std::uint64_t i = 0; i < 256; ++i) {
      const Genome g = Genome::from_index(i, 8);
      const double c = surrogate_cost(g, p);
      REQUIRE(std::isfinite(c));
      REQUIRE(c >= 0.0);
      CHECK(c == surrogate_cost(g, p));
      pts.emplace_back(fringe_edges(expand_genome(g, sym, p.grid)), c);
    }
    for (const auto& [e1, c1] : pts) {
      for (const auto& [e2, c2] : pts) {
        if (e1 > e2) REQUIRE(c1 < c2);
        if (e1 == e2) REQUIRE(c1 == c2);
      }
    }
  }
}

TEST_CASE("surrogate profile validation") {
  auto p = SurrogateProfile::idc1500();
  p.eps_sam = p.eps_ref;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = SurrogateProfile::idc1500();
  p.inductance = 0;
  CHECK_THROWS_AS(SurrogateObjective{p}, ConfigError);
  CHECK_THROWS_AS(SurrogateProfile::named("idc9000"), ConfigError);
  CHECK(SurrogateProfile::named("idc5000").inductance < SurrogateProfile::idc1500().inductance);
  // The 5 GHz profile resonates near 5 GHz with an empty pattern.
  const auto p5 = SurrogateProfile::idc5000();
  CHECK(resonant_frequency(p5.plate_capacitance, p5.inductance) ==
        doctest::Approx(5.305e9).epsilon(1e-3));
}

TEST_CASE("onemax and trap examples") {
  CHECK(onemax_cost(Genome::ones(96)) == 0.0);
  CHECK(onemax_cost(Genome::zeros(96)) == 96.0);
  Genome half = Genome::zeros(96);
  for (std::size_t i = 0; i < 48; ++i) half.set(i * 2, true);
  CHECK(onemax_cost(half) == 48.0);

  CHECK(trap_cost(Genome::ones(96), 4) == 0.0);
  CHECK(trap_cost(Genome::zeros(96), 4) == 24.0);
  Genome trap = Genome::ones(96);
  trap.set(3, false);  // first block 1110
  CHECK(trap_cost(trap, 4) == 4.0);
  CHECK_THROWS_AS(trap_cost(Genome::ones(10), 4), ConfigError);
  CHECK_THROWS_AS(TrapObjective(10, 4), ConfigError);

  const TrapObjective t(8, 4);
  CHECK(t.cost(Genome::from_text("11111111")) == 0.0);
  CHECK(t.cost(Genome::from_text("00000000")) == 2.0);
}
