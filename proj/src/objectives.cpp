#include "idcopt/objectives.hpp"

#include <cmath>
#include <numbers>

#include "idcopt/errors.hpp"

namespace idcopt {

SurrogateProfile SurrogateProfile::idc1500() { return {}; }

SurrogateProfile SurrogateProfile::idc5000() {
  SurrogateProfile p;
  p.name = "idc5000";
  p.inductance = 0.9e-9;
  return p;
}

SurrogateProfile SurrogateProfile::reduced() {
  SurrogateProfile p;
  p.name = "reduced";
  p.grid = GridShape::reduced();
  return p;
}

SurrogateProfile SurrogateProfile::named(std::string_view name) {
  if (name == "idc1500") return idc1500();
  if (name == "idc5000") return idc5000();
  if (name == "reduced") return reduced();
  throw ConfigError("objective.profile", "unknown surrogate profile '" + std::string(name) + "'");
}

void SurrogateProfile::validate() const {
  if (!(inductance > 0) || !(plate_capacitance > 0) || !(edge_capacitance > 0) ||
      !(delta_min > 0)) {
    throw ConfigError("objective.profile", "surrogate constants must be positive");
  }
  if (eps_sam == eps_ref) {
    throw ConfigError("objective.profile", "eps_sam must differ from eps_ref");
  }
}

std::size_t fringe_edges(const CellGrid& grid) {
  std::size_t edges = 0;
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      if (c + 1 < grid.cols() && grid.at(r, c) != grid.at(r, c + 1)) ++edges;
      if (r + 1 < grid.rows() && grid.at(r, c) != grid.at(r + 1, c)) ++edges;
    }
  }
  return edges;
}

double resonant_frequency(double capacitance, double inductance) {
  if (!(capacitance > 0) || !(inductance > 0)) {
    throw DomainError("resonant_frequency: capacitance and inductance must be positive");
  }
  return 1.0 / (2.0 * std::numbers::pi * std::sqrt(inductance * capacitance));
}

double surrogate_cost(const Genome& g, const SurrogateProfile& p) {
  const auto edges = static_cast<double>(fringe_edges(expand_genome(g, p.symmetry, p.grid)));
  const double c_ref = p.plate_capacitance + p.eps_ref * p.edge_capacitance * edges;
  const double c_sam = p.plate_capacitance + p.eps_sam * p.edge_capacitance * edges;
  const double f_ref = resonant_frequency(c_ref, p.inductance);
  const double f_sam = resonant_frequency(c_sam, p.inductance);
  const double shift = std::abs(f_sam - f_ref);
  if (shift < p.delta_min) return f_ref / p.delta_min;
  return f_ref / shift;
}

double onemax_cost(const Genome& g) {
  return static_cast<double>(g.size() - g.count_ones());
}

double trap_cost(const Genome& g, std::size_t k) {
  if (k == 0 || g.size() % k != 0) {
    throw ConfigError("objective.k", "trap block size must divide the genome length");
  }
  double cost = 0.0;
  for (std::size_t start = 0; start < g.size(); start += k) {
    std::size_t ones = 0;
    for (std::size_t i = start; i < start + k; ++i) ones += g[i];
    if (ones != k) cost += static_cast<double>(ones + 1);
  }
  return cost;
}

SurrogateObjective::SurrogateObjective(SurrogateProfile profile) : profile_(std::move(profile)) {
  profile_.validate();
}

TrapObjective::TrapObjective(std::size_t dimension, std::size_t block)
    : dimension_(dimension), block_(block) {
  if (block_ == 0 || dimension_ % block_ != 0) {
    throw ConfigError("objective.k", "trap block size must divide the genome length");
  }
}

}  // namespace idcopt
