#pragma once

#include <mutex>
#include <string>
#include <sys/types.h>
#include <vector>

#include "idcopt/objective.hpp"

namespace idcopt {

/// How to launch and supervise the child evaluator.
struct ExternalEvaluatorConfig {
  std::vector<std::string> argv;  // argv[0] is resolved through PATH
  double timeout_seconds = 30.0;
  /// Fresh launches allowed after the child dies or misbehaves.
  int max_restarts = 3;
};

/// Line protocol over the child's stdin/stdout:
///   request: D ASCII '0'/'1' characters followed by '\n'
///   reply:   one decimal floating-point cost followed by '\n'
/// One reply per request, in order. Closing stdin asks the child to exit.
///
/// Requests are serialized; a failed exchange kills the child and the next
/// request relaunches it while restarts remain.
class ExternalObjective final : public Objective {
 public:
  ExternalObjective(ExternalEvaluatorConfig config, std::size_t dimension);
  ~ExternalObjective() override;

  ExternalObjective(const ExternalObjective&) = delete;
  ExternalObjective& operator=(const ExternalObjective&) = delete;

  std::size_t dimension() const override { return dimension_; }
  /// Throws EvaluatorError (carrying the genome text) on timeout,
  /// malformed reply or child exit.
  double cost(const Genome& g) const override;
  std::string name() const override { return "external"; }
  bool concurrent_safe() const override { return false; }

  int restarts_used() const noexcept { return restarts_used_; }

 private:
  void launch() const;
  void shutdown() const;
  std::string exchange(const std::string& request, const std::string& genome_text) const;

  ExternalEvaluatorConfig config_;
  std::size_t dimension_;
  mutable std::mutex mutex_;
  mutable pid_t pid_ = -1;
  mutable int to_child_ = -1;
  mutable int from_child_ = -1;
  mutable std::string pending_;
  mutable int launches_ = 0;
  mutable int restarts_used_ = 0;
};

/// Strict parse of a reply line: the whole line must be one finite decimal.
/// Returns false for anything else.
bool parse_cost_reply(const std::string& line, double& cost);

}  // namespace idcopt
