#include <benchmark/benchmark.h>

#include "fqt/regression.hpp"
#include "fqt/synth.hpp"

namespace {

struct Inputs {
  std::vector<double> x;
  std::vector<double> g;
  std::vector<double> y;
};

Inputs make_inputs(std::size_t n, std::size_t p) {
  fqt::Xoshiro256 rng(n * 31 + p);
  Inputs in;
  in.x.resize(n * p);
  in.g.resize(n);
  in.y.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double fitted = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      in.x[k * p + j] = rng.uniform();
      fitted += 30.0 * in.x[k * p + j];
    }
    in.g[k] = rng.uniform(0.5, 1.0);
    in.y[k] = fitted + 5.0 * rng.gaussian();
  }
  return in;
}

void BM_FqtFit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<std::size_t>(state.range(1));
  const auto in = make_inputs(n, p);
  const fqt::DesignMatrix x(n, p, in.x);
  const fqt::WeightVector g(in.g);
  const fqt::ResponseVector y(in.y);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqt::fqt_fit(x, g, y));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_FqtFit)->ArgsProduct({{433, 10000, 100000}, {1, 3}});

void BM_OlsFit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = make_inputs(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqt::ols_fit(in.x, in.y, fqt::CovariateUnit::kMembership));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_OlsFit)->Arg(433)->Arg(100000);

void BM_WeightedSse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = make_inputs(n, 1);
  const fqt::DesignMatrix x(n, 1, in.x);
  const fqt::WeightVector g(in.g);
  const fqt::ResponseVector y(in.y);
  const fqt::CategoryWeights a{{30.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqt::weighted_sse(x, g, y, a));
  }
}
BENCHMARK(BM_WeightedSse)->Arg(100000);

}  // namespace
