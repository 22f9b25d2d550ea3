#include "idcopt/run_record.hpp"

#include <cstdio>
#include <sstream>

namespace idcopt {

namespace {

std::string format_cost(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string RunRecord::convergence_csv() const {
  std::ostringstream out;
  out << "iteration,evaluations,best_cost\n";
  for (const auto& e : entries) {
    out << e.iteration << ',' << e.evaluations << ',' << format_cost(e.best_cost) << '\n';
  }
  return out.str();
}

RunTracker::RunTracker(std::string algorithm, std::uint64_t seed, const Evaluator& evaluator)
    : evaluator_(evaluator), start_(std::chrono::steady_clock::now()) {
  record_.algorithm = std::move(algorithm);
  record_.seed = seed;
}

bool RunTracker::offer(const Genome& g, double cost) {
  if (cost < record_.best_cost) {
    record_.best_cost = cost;
    record_.best = g;
    return true;
  }
  return false;
}

void RunTracker::end_iteration(std::size_t iteration) {
  record_.entries.push_back({iteration, evaluator_.meter().evaluations_used, record_.best_cost});
}

RunRecord RunTracker::finish() {
  record_.evaluations = evaluator_.meter().evaluations_used;
  record_.cache_hits = evaluator_.meter().cache_hits;
  record_.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return std::move(record_);
}

}  // namespace idcopt
