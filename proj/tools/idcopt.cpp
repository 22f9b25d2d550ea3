// Command-line front end: run, compare, oracle, render, probe.
// Exit codes: 0 success, 1 configuration error, 2 runtime or evaluator error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idcopt/algorithms.hpp"
#include "idcopt/config.hpp"
#include "idcopt/errors.hpp"
#include "idcopt/experiment.hpp"
#include "idcopt/objectives.hpp"
#include "idcopt/oracle.hpp"
#include "idcopt/parallel.hpp"
#include "idcopt/probe.hpp"
#include "idcopt/render.hpp"

using namespace idcopt;

namespace {

struct CampaignFlags {
  std::string config;
  std::vector<std::string> algos;
  std::string objective;
  std::uint64_t seed = 0;
  std::string seeds;
  std::size_t budget = 0;
  std::string out;
  std::string symmetry;
  bool scale = false;
  bool parallel = false;
  int threads = 0;
  bool quiet = false;

  CLI::Option* seed_opt = nullptr;
  CLI::Option* budget_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

void add_campaign_flags(CLI::App* app, CampaignFlags& f) {
  app->add_option("--config", f.config, "JSON experiment file");
  app->add_option("--algo", f.algos, "Algorithm name(s) or 'all'")->delimiter(',');
  app->add_option("--objective", f.objective,
                  "surrogate[:idc1500|idc5000|reduced], onemax[:D], trap[:D[:k]], external:<cmd>");
  f.seed_opt = app->add_option("--seed", f.seed, "Single seed");
  app->add_option("--seeds", f.seeds, "Seed list, e.g. 1,2,5-8")->excludes(f.seed_opt);
  f.budget_opt = app->add_option("--budget", f.budget, "Evaluations per run");
  app->add_option("--out", f.out, "Output directory");
  app->add_option("--symmetry", f.symmetry, "mirror | antisym");
  app->add_flag("--scale-iterations", f.scale, "Raise iteration caps to fill the budget");
  app->add_flag("--parallel", f.parallel, "Use the OpenMP kernels");
  f.threads_opt = app->add_option("--threads", f.threads, "OpenMP thread count");
  app->add_flag("-q,--quiet", f.quiet, "Do not print the report");
}

ExperimentConfig assemble(const CampaignFlags& f, bool default_all) {
  ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  if (f.config.empty() && default_all) cfg.algorithms = expand_algorithms({"all"});
  if (!f.algos.empty()) cfg.algorithms = expand_algorithms(f.algos);
  if (!f.objective.empty()) {
    const Symmetry keep = cfg.objective.symmetry;
    cfg.objective = ObjectiveSpec::parse(f.objective);
    cfg.objective.symmetry = keep;
  }
  if (!f.symmetry.empty()) {
    if (cfg.objective.kind != "surrogate") {
      throw ConfigError("symmetry", "only valid for surrogate objectives");
    }
    cfg.objective.symmetry = parse_symmetry(f.symmetry);
  }
  if (f.seed_opt->count()) cfg.seeds = {f.seed};
  if (!f.seeds.empty()) cfg.seeds = parse_seed_list(f.seeds);
  if (f.budget_opt->count()) cfg.budget = f.budget;
  if (!f.out.empty()) cfg.output_dir = f.out;
  if (f.scale) cfg.scale_iterations = true;
  if (f.parallel) cfg.parallel = true;
  if (f.threads_opt->count()) cfg.threads = f.threads;
  cfg.validate();
  return cfg;
}

int do_campaign(const CampaignFlags& f, bool default_all) {
  const ExperimentConfig cfg = assemble(f, default_all);
  const ExperimentResult result = run_experiment(cfg);
  write_outputs(result, cfg, cfg.output_dir);
  if (!f.quiet) std::cout << result.report.to_text();
  int failed = 0;
  for (const auto& c : result.cells) {
    if (!c.ok()) {
      std::cerr << "idcopt: " << c.algorithm << " seed " << c.seed << " failed: " << c.error
                << "\n";
      ++failed;
    }
  }
  return failed ? 2 : 0;
}

Genome read_genome(const std::string& text, const std::string& file) {
  if (file.empty()) return Genome::from_text(text);
  std::ifstream in(file);
  if (!in) throw ConfigError("genome-file", "cannot open '" + file + "'");
  std::string line;
  std::getline(in, line);
  return Genome::from_text(line);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary metaheuristics for IDC cell-pattern design"};
  app.require_subcommand(1);

  CampaignFlags run_flags;
  auto* run = app.add_subcommand("run", "Run a seeded campaign and write its outputs");
  add_campaign_flags(run, run_flags);

  CampaignFlags cmp_flags;
  auto* compare = app.add_subcommand("compare", "Like run, but every algorithm by default");
  add_campaign_flags(compare, cmp_flags);

  std::string oracle_objective = "surrogate:reduced";
  std::string oracle_symmetry;
  bool oracle_parallel = false;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for D <= 20");
  oracle->add_option("--objective", oracle_objective, "Objective spec");
  oracle->add_option("--symmetry", oracle_symmetry, "mirror | antisym");
  oracle->add_flag("--parallel", oracle_parallel, "Use the OpenMP kernel");

  std::string genome_text;
  std::string genome_file;
  std::string render_symmetry = "mirror";
  std::string render_profile = "idc1500";
  std::string svg_path;
  auto* render = app.add_subcommand("render", "Draw a genome as a cell grid");
  auto* gopt = render->add_option("--genome", genome_text, "Genome as 0/1 text");
  render->add_option("--genome-file", genome_file, "File whose first line is the genome")
      ->excludes(gopt);
  render->add_option("--symmetry", render_symmetry, "mirror | antisym");
  render->add_option("--profile", render_profile, "Grid of this surrogate profile");
  render->add_option("--svg", svg_path, "Also write an SVG drawing here");

  std::vector<std::string> probe_algos{"bpso", "abc", "aco", "alo", "rlbpso", "sa"};
  std::vector<std::size_t> probe_ns{5, 10, 20};
  std::size_t probe_iter = 25;
  auto* probe = app.add_subcommand("probe", "Count evaluations against population size");
  probe->add_option("--algo", probe_algos, "Algorithms to probe")->delimiter(',');
  probe->add_option("--populations", probe_ns, "Population sizes")->delimiter(',');
  probe->add_option("--max-iter", probe_iter, "Iteration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) return do_campaign(run_flags, false);
    if (*compare) return do_campaign(cmp_flags, true);
    if (*oracle) {
      ObjectiveSpec spec = ObjectiveSpec::parse(oracle_objective);
      if (!oracle_symmetry.empty()) spec.symmetry = parse_symmetry(oracle_symmetry);
      const auto obj = make_objective(spec);
      const auto res = oracle_bruteforce(*obj, oracle_parallel ? Exec::parallel : Exec::serial);
      std::printf("objective %s\nevaluated %zu\nbest %s\ncost %.17g\noptima %zu\n",
                  spec.describe().c_str(), res.evaluated, res.best.to_text().c_str(),
                  res.best_cost, res.optima);
      if (spec.kind == "surrogate") {
        const auto profile = SurrogateProfile::named(spec.profile);
        std::cout << render_text(res.best, spec.symmetry, profile.grid);
      }
      return 0;
    }
    if (*render) {
      if (genome_text.empty() && genome_file.empty()) {
        throw ConfigError("genome", "give --genome or --genome-file");
      }
      const Genome g = read_genome(genome_text, genome_file);
      const Symmetry sym = parse_symmetry(render_symmetry);
      const GridShape shape = SurrogateProfile::named(render_profile).grid;
      std::cout << render_text(g, sym, shape);
      if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        out << render_svg(g, sym, shape);
        if (!out) throw std::runtime_error("cannot write '" + svg_path + "'");
      }
      return 0;
    }
    if (*probe) {
      for (const auto& a : probe_algos) {
        if (!is_algorithm(a)) throw ConfigError("algo", "unknown algorithm '" + a + "'");
        std::cout << format_probe(a, eval_count_probe(a, probe_ns, probe_iter));
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "idcopt: config error: " << e.what() << "\n";
    return 1;
  } catch (const EncodingError& e) {
    std::cerr << "idcopt: config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "idcopt: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
