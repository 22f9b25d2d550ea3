#pragma once

#include <stdexcept>
#include <string>

namespace idcopt {

/// Genome text/length does not fit the grid profile.
class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bad experiment or optimizer configuration. `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Raised by the evaluator when a cache miss would exceed the evaluation budget.
/// Optimizers catch it and stop cleanly.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

/// External evaluator failure: timeout, malformed reply or child exit.
class EvaluatorError : public std::runtime_error {
 public:
  EvaluatorError(const std::string& message, std::string genome_text)
      : std::runtime_error(message), genome_(std::move(genome_text)) {}

  /// Text form of the genome whose evaluation failed.
  const std::string& genome() const noexcept { return genome_; }

 private:
  std::string genome_;
};

}  // namespace idcopt
