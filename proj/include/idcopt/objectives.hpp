#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "idcopt/grid.hpp"
#include "idcopt/objective.hpp"

namespace idcopt {

/// Lumped-element stand-in for the IDC electromagnetic simulation.
///
/// Capacitance grows with the number of metal/empty boundaries (fringing
/// edges) scaled by the permittivity on top of the sensor. The constants are
/// placeholders chosen to land near the 1.5 GHz and 5 GHz designs; they are
/// not calibrated against any field solver.
struct SurrogateProfile {
  std::string name = "idc1500";
  double inductance = 10e-9;         // H
  double plate_capacitance = 1e-12;  // F
  double edge_capacitance = 2e-15;   // F per boundary edge
  double eps_ref = 1.0;
  double eps_sam = 2.0;
  double delta_min = 1e3;  // Hz
  Symmetry symmetry = Symmetry::mirror;
  GridShape grid = GridShape::full();

  static SurrogateProfile idc1500();
  static SurrogateProfile idc5000();
  /// idc1500 constants on the 3 x 4 grid (8 free bits).
  static SurrogateProfile reduced();
  /// Looks up idc1500 / idc5000 / reduced; throws ConfigError otherwise.
  static SurrogateProfile named(std::string_view name);

  /// Throws ConfigError when a constant is non-positive or eps_sam == eps_ref.
  void validate() const;
};

/// Orthogonally adjacent cell pairs whose values differ.
std::size_t fringe_edges(const CellGrid& grid);

/// 1 / (2 pi sqrt(L C)). Throws DomainError unless both are positive.
double resonant_frequency(double capacitance, double inductance);

/// f_ref / |f_sam - f_ref|, or f_ref / delta_min when the shift is below delta_min.
double surrogate_cost(const Genome& g, const SurrogateProfile& p);

double onemax_cost(const Genome& g);

/// Concatenated deceptive traps: a block with u ones costs u + 1, or 0 when full.
/// Throws ConfigError when k is 0 or does not divide the genome length.
double trap_cost(const Genome& g, std::size_t k);

class SurrogateObjective final : public Objective {
 public:
  explicit SurrogateObjective(SurrogateProfile profile);

  std::size_t dimension() const override { return profile_.grid.free_cells(); }
  double cost(const Genome& g) const override { return surrogate_cost(g, profile_); }
  std::string name() const override { return "surrogate:" + profile_.name; }
  const SurrogateProfile& profile() const noexcept { return profile_; }

 private:
  SurrogateProfile profile_;
};

class OneMaxObjective final : public Objective {
 public:
  explicit OneMaxObjective(std::size_t dimension = kDefaultDimension) : dimension_(dimension) {}

  std::size_t dimension() const override { return dimension_; }
  double cost(const Genome& g) const override { return onemax_cost(g); }
  std::string name() const override { return "onemax"; }

 private:
  std::size_t dimension_;
};

class TrapObjective final : public Objective {
 public:
  TrapObjective(std::size_t dimension = kDefaultDimension, std::size_t block = 4);

  std::size_t dimension() const override { return dimension_; }
  double cost(const Genome& g) const override { return trap_cost(g, block_); }
  std::string name() const override { return "trap"; }

 private:
  std::size_t dimension_;
  std::size_t block_;
};

}  // namespace idcopt
