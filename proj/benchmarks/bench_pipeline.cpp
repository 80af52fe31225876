#include <benchmark/benchmark.h>

#include <sstream>

#include "fqt/analysis.hpp"
#include "fqt/dataset.hpp"
#include "fqt/synth.hpp"

namespace {

fqt::Dataset cohort(std::size_t n) {
  fqt::SynthConfig cfg;
  cfg.n = n;
  cfg.true_a = {{"pedagogic", 88}, {"professional", 91}, {"personality", 89}, {"social", 86}};
  cfg.noise_sigma = 5;
  cfg.seed = 1;
  return fqt::generate(cfg).dataset;
}

void BM_AnalyzeDataset(benchmark::State& state) {
  const auto ds = cohort(static_cast<std::size_t>(state.range(0)));
  const fqt::RampMembership ramp;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqt::analyze_dataset(ds, ramp));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AnalyzeDataset)->Arg(433)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ParseProcessedCsv(benchmark::State& state) {
  std::ostringstream out;
  fqt::write_processed_csv(cohort(static_cast<std::size_t>(state.range(0))), out);
  const auto text = out.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(fqt::parse_processed_csv(in));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseProcessedCsv)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cohort(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Generate)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
