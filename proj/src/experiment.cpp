#include "idcopt/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "idcopt/algorithms.hpp"
#include "idcopt/errors.hpp"
#include "idcopt/objectives.hpp"
#include "idcopt/parallel.hpp"
#include "idcopt/render.hpp"

namespace idcopt {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::infinity();
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

CellResult run_cell(const std::string& algo, std::uint64_t seed, const ExperimentConfig& cfg,
                    const AlgorithmConfig& params, const Objective& objective, Exec batch_exec) {
  CellResult cell{algo, seed, std::nullopt, {}};
  try {
    Evaluator evaluator(objective, cfg.budget, EvalOptions{true, batch_exec});
    cell.record = run_algorithm(algo, params, evaluator, seed);
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

ComparisonReport build_report(const std::vector<CellResult>& cells,
                              const std::vector<std::string>& algorithms,
                              const std::vector<std::uint64_t>& seeds, std::string title) {
  ComparisonReport report{std::move(title), seeds, {}};
  for (const auto& algo : algorithms) {
    ReportRow row{algo, display_name(algo), std::numeric_limits<double>::infinity(), 0.0,
                  {}, {}, {}, 0};
    std::vector<double> ok;
    for (std::uint64_t seed : seeds) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const CellResult& c) {
        return c.algorithm == algo && c.seed == seed;
      });
      if (it == cells.end() || !it->ok()) {
        row.costs.emplace_back(std::nullopt);
        row.evaluations.push_back(0);
        row.wall_seconds.push_back(0.0);
        ++row.failed;
        continue;
      }
      const RunRecord& r = *it->record;
      row.costs.emplace_back(r.best_cost);
      row.evaluations.push_back(r.evaluations);
      row.wall_seconds.push_back(r.wall_seconds);
      ok.push_back(r.best_cost);
      row.best_cost = std::min(row.best_cost, r.best_cost);
    }
    row.median_cost = median_of(ok);
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.median_cost < b.median_cost; });
  return report;
}

std::string ComparisonReport::to_text() const {
  std::size_t name_w = std::string("Algorithms").size();
  for (const auto& r : rows) name_w = std::max(name_w, r.display.size());
  const std::size_t num_w = 12;

  auto cell = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  auto cost = [](double v) { return std::isfinite(v) ? fmt("%.4f", v) : std::string("FAILED"); };
  const std::string rule = "+" + std::string(name_w + 2, '-') + "+" + std::string(num_w + 2, '-') +
                           "+" + std::string(num_w + 2, '-') + "+" + std::string(num_w + 2, '-') +
                           "+\n";

  std::string out = title + "\n";
  out += rule;
  out += "| " + cell("Algorithms", name_w) + " | " + cell("Cost", num_w) + " | " +
         cell("Median", num_w) + " | " + cell("Evaluations", num_w) + " |\n";
  out += rule;
  for (const auto& r : rows) {
    std::size_t evals = 0;
    for (auto e : r.evaluations) evals = std::max(evals, e);
    std::string note = r.failed ? "  (" + std::to_string(r.failed) + " failed)" : "";
    out += "| " + cell(r.display, name_w) + " | " + cell(cost(r.best_cost), num_w) + " | " +
           cell(cost(r.median_cost), num_w) + " | " + cell(std::to_string(evals), num_w) + " |" +
           note + "\n";
    out += rule;
  }
  return out;
}

std::string ComparisonReport::to_csv() const {
  std::string out = "rank,algorithm,name,best_cost,median_cost,runs,failed";
  for (auto s : seeds) out += ",seed" + std::to_string(s);
  out += "\n";
  std::size_t rank = 1;
  for (const auto& r : rows) {
    out += std::to_string(rank++) + "," + r.algorithm + ",\"" + r.display + "\"," +
           fmt("%.17g", r.best_cost) + "," + fmt("%.17g", r.median_cost) + "," +
           std::to_string(r.costs.size()) + "," + std::to_string(r.failed);
    for (const auto& c : r.costs) out += "," + (c ? fmt("%.17g", *c) : std::string("FAILED"));
    out += "\n";
  }
  return out;
}

std::string ComparisonReport::timing_text() const {
  std::string out = "Time comparison (seconds per run)\n";
  out += "Algorithms";
  for (auto s : seeds) out += "\tseed " + std::to_string(s);
  out += "\n";
  for (const auto& r : rows) {
    out += r.display;
    for (std::size_t i = 0; i < r.wall_seconds.size(); ++i) {
      out += "\t" + (r.costs[i] ? fmt("%.6f", r.wall_seconds[i]) : std::string("FAILED"));
    }
    out += "\n";
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.threads > 0) set_threads(cfg.threads);
  const std::unique_ptr<Objective> objective = make_objective(cfg.objective);
  const AlgorithmConfig params =
      cfg.scale_iterations ? scale_to_budget(cfg.params, cfg.budget) : cfg.params;

  std::vector<std::pair<std::string, std::uint64_t>> plan;
  for (const auto& a : cfg.algorithms) {
    for (auto s : cfg.seeds) plan.emplace_back(a, s);
  }
  ExperimentResult result;
  result.cells.resize(plan.size());

  const bool cell_parallel = cfg.parallel && objective->concurrent_safe() && openmp_enabled();
  if (cell_parallel) {
    const auto n = static_cast<long long>(plan.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
      const auto& [algo, seed] = plan[static_cast<std::size_t>(i)];
      result.cells[static_cast<std::size_t>(i)] =
          run_cell(algo, seed, cfg, params, *objective, Exec::serial);
    }
  } else {
    const Exec exec = cfg.parallel ? Exec::parallel : Exec::serial;
    for (std::size_t i = 0; i < plan.size(); ++i) {
      result.cells[i] = run_cell(plan[i].first, plan[i].second, cfg, params, *objective, exec);
    }
  }

  const std::string title = "Best cost comparison: " + cfg.objective.describe() + ", budget " +
                            std::to_string(cfg.budget) + ", " + std::to_string(cfg.seeds.size()) +
                            (cfg.seeds.size() == 1 ? " seed" : " seeds");
  result.report = build_report(result.cells, cfg.algorithms, cfg.seeds, title);
  return result;
}

void write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::optional<SurrogateProfile> profile;
  if (cfg.objective.kind == "surrogate") {
    profile = SurrogateProfile::named(cfg.objective.profile);
    profile->symmetry = cfg.objective.symmetry;
  }
  for (const auto& c : result.cells) {
    const std::string stem = c.algorithm + "_seed" + std::to_string(c.seed);
    if (!c.ok()) {
      write_file(dir / (stem + "_error.txt"), c.error + "\n");
      continue;
    }
    write_file(dir / (stem + ".csv"), c.record->convergence_csv());
    std::string best = c.record->best.to_text() + "\n";
    best += "cost " + fmt("%.17g", c.record->best_cost) + "\n";
    if (profile && c.record->best.size() == profile->grid.free_cells()) {
      best += render_text(c.record->best, profile->symmetry, profile->grid);
    }
    write_file(dir / (stem + "_best.txt"), best);
  }
  write_file(dir / "report.txt", result.report.to_text());
  write_file(dir / "report.csv", result.report.to_csv());
  write_file(dir / "timing.txt", result.report.timing_text());
}

}  // namespace idcopt
