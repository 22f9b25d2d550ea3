#include "idcopt/probe.hpp"

#include <cstdio>
#include <limits>

#include "idcopt/algorithms.hpp"
#include "idcopt/evaluator.hpp"
#include "idcopt/objective.hpp"

namespace idcopt {

std::vector<ProbeRow> eval_count_probe(std::string_view algorithm,
                                       std::span<const std::size_t> populations,
                                       std::size_t max_iter, std::size_t dimension,
                                       std::uint64_t seed) {
  const ConstantObjective objective(dimension, 1.0);
  std::vector<ProbeRow> rows;
  for (std::size_t n : populations) {
    AlgorithmConfig cfg;
    cfg.bpso.max_iter = max_iter;
    cfg.rlbpso.max_iter = max_iter;
    cfg.abc.max_iter = max_iter;
    cfg.aco.max_iter = max_iter;
    cfg.alo.max_iter = max_iter;
    cfg.sa.max_iter = max_iter;
    cfg.abc.limit = std::numeric_limits<std::size_t>::max();
    set_population(cfg, algorithm, n);

    Evaluator evaluator(objective, std::numeric_limits<std::size_t>::max() / 2,
                        EvalOptions{false, Exec::serial});
    const RunRecord rec = run_algorithm(algorithm, cfg, evaluator, seed);
    rows.push_back({n, rec.evaluations, nominal_evaluations(algorithm, cfg)});
  }
  return rows;
}

std::string format_probe(std::string_view algorithm, const std::vector<ProbeRow>& rows) {
  std::string out = "algorithm,population,evaluations,closed_form,ratio\n";
  const double base = rows.empty() ? 1.0 : static_cast<double>(rows.front().evaluations);
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.*s,%zu,%zu,%zu,%.3f\n", static_cast<int>(algorithm.size()),
                  algorithm.data(), r.population, r.evaluations, r.closed_form,
                  base > 0 ? static_cast<double>(r.evaluations) / base : 0.0);
    out += buf;
  }
  return out;
}

}  // namespace idcopt
