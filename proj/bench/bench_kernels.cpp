// Serial reference kernels against their OpenMP counterparts.
// Range argument: grid cells per axis on the two-dimensional p2_o2 fixture.

#include <benchmark/benchmark.h>

#include "toric/cli/variety.hpp"
#include "toric/lelong/kernels.hpp"
#include "toric/lelong/lab.hpp"

namespace {

using namespace toric;
using namespace toric::lelong;

const cli::Variety& variety() {
  static const cli::Variety v = cli::build_variety(cli::load_variety("p2_o2"));
  return v;
}

WeightGrid grid_for(const benchmark::State& state) {
  return WeightGrid(GridSpec{2, 8.0, static_cast<std::size_t>(state.range(0)), 8});
}

template <auto Kernel>
void BM_SampleLambda(benchmark::State& state) {
  const auto g = grid_for(state);
  const auto w = lambda_weight(variety().polytope);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

template <auto Kernel>
void BM_EnvelopeMax(benchmark::State& state) {
  const auto g = grid_for(state);
  const auto net = direction_net(variety().polytope, 32, 7);
  const std::vector<double> scales(net.size(), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(net, scales, g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size() * net.size()));
}

template <auto Kernel>
void BM_RunningMax(benchmark::State& state) {
  const auto g = grid_for(state);
  const auto net = direction_net(variety().polytope, 16, 7);
  const auto seq = net_power_sequence(net, 32);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(seq, g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size() * seq.size()));
}

template <auto Kernel>
void BM_MaxFilter(benchmark::State& state) {
  const auto g = grid_for(state);
  const auto values = omp::sample(g, lambda_weight(variety().polytope));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, values));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

}  // namespace

BENCHMARK(BM_SampleLambda<serial::sample>)->Arg(32)->Arg(64);
BENCHMARK(BM_SampleLambda<omp::sample>)->Arg(32)->Arg(64);
BENCHMARK(BM_EnvelopeMax<serial::envelope_max>)->Arg(32)->Arg(64);
BENCHMARK(BM_EnvelopeMax<omp::envelope_max>)->Arg(32)->Arg(64);
BENCHMARK(BM_RunningMax<serial::running_max>)->Arg(32);
BENCHMARK(BM_RunningMax<omp::running_max>)->Arg(32);
BENCHMARK(BM_MaxFilter<serial::max_filter>)->Arg(32)->Arg(64);
BENCHMARK(BM_MaxFilter<omp::max_filter>)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
