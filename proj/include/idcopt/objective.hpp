#pragma once

#include <cstddef>
#include <string>

#include "idcopt/genome.hpp"

namespace idcopt {

/// Cost evaluator. Lower is better; costs are finite and non-negative, and the
/// same genome always yields the same cost.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dimension() const = 0;
  virtual double cost(const Genome& g) const = 0;
  virtual std::string name() const = 0;
  /// False when cost() must not be called from several threads at once.
  virtual bool concurrent_safe() const { return true; }
};

/// Same cost for every genome. Used by probes and degenerate-case tests.
class ConstantObjective final : public Objective {
 public:
  ConstantObjective(std::size_t dimension, double value) : dimension_(dimension), value_(value) {}

  std::size_t dimension() const override { return dimension_; }
  double cost(const Genome&) const override { return value_; }
  std::string name() const override { return "constant"; }

 private:
  std::size_t dimension_;
  double value_;
};

}  // namespace idcopt
