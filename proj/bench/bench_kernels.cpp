// Serial reference vs OpenMP kernels: exhaustive oracle, batch evaluation and
// campaign cells.
#include <benchmark/benchmark.h>

#include "idcopt/config.hpp"
#include "idcopt/evaluator.hpp"
#include "idcopt/experiment.hpp"
#include "idcopt/objectives.hpp"
#include "idcopt/oracle.hpp"

using namespace idcopt;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_Oracle(benchmark::State& state) {
  auto profile = SurrogateProfile::reduced();
  profile.grid = {5, 6};  // 3 free rows x 6 = 18 bits
  const SurrogateObjective obj(profile);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_bruteforce(obj, mode(state)).best_cost);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << obj.dimension()));
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_BatchSurrogate(benchmark::State& state) {
  const SurrogateObjective obj(SurrogateProfile::idc1500());
  RngStream rng(1);
  std::vector<Genome> batch;
  for (int i = 0; i < 4096; ++i) batch.push_back(Genome::random(96, rng));
  for (auto _ : state) {
    Evaluator ev(obj, batch.size(), EvalOptions{false, mode(state)});
    benchmark::DoNotOptimize(ev.evaluate_batch(batch));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.size()));
}
BENCHMARK(BM_BatchSurrogate)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.algorithms = expand_algorithms({"all"});
  cfg.seeds = {1, 2, 3, 4};
  cfg.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg).report.rows.size());
}
BENCHMARK(BM_Campaign)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
