#include <benchmark/benchmark.h>

#include "cubiclab/catalog.hpp"
#include "cubiclab/construct.hpp"
#include "cubiclab/groebner.hpp"
#include "cubiclab/lattice.hpp"

using namespace cubiclab;

namespace {

void BM_DelPezzoKernel(benchmark::State& state) {
  const ParamSurface dp = del_pezzo_quintic();
  for (auto _ : state) benchmark::DoNotOptimize(kernel(dp.parametrization));
}
BENCHMARK(BM_DelPezzoKernel)->Unit(benchmark::kMillisecond);

void BM_ScrollQuadricKernel(benchmark::State& state) {
  const RingMap psi = scroll_quadric_map(ScrollKind::s22);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(psi));
}
BENCHMARK(BM_ScrollQuadricKernel)->Unit(benchmark::kMillisecond);

void BM_GroebnerOrder(benchmark::State& state) {
  const TermOrder order = state.range(0) == 0 ? TermOrder::grevlex() : TermOrder::lex();
  const Ideal S = quartic_scroll(ScrollKind::s13);
  for (auto _ : state) {
    const Ideal fresh(S.ring(), S.generators());
    benchmark::DoNotOptimize(fresh.groebner(order).size());
  }
}
BENCHMARK(BM_GroebnerOrder)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Saturate(benchmark::State& state) {
  const Ideal I = del_pezzo_quintic().ideal + standard_plane("a");
  for (auto _ : state) {
    const Ideal fresh(I.ring(), I.generators());
    benchmark::DoNotOptimize(saturate(fresh));
  }
}
BENCHMARK(BM_Saturate)->Unit(benchmark::kMillisecond);

void BM_SegreThreefold(benchmark::State& state) {
  const auto pencils = conic_pencils(del_pezzo_quintic());
  const auto& pencil = pencils[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(segre_threefold(pencil));
  state.SetLabel(pencil.label);
}
BENCHMARK(BM_SegreThreefold)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Fixture(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(run_fixture(name).passed());
}
BENCHMARK_CAPTURE(BM_Fixture, dp_c, "dp-c")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fixture, skew_planes, "skew-planes")->Unit(benchmark::kMillisecond);

void BM_Rsci(benchmark::State& state) {
  const Ideal dp = del_pezzo_quintic().ideal;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RsciConfig cfg;
    cfg.seed = seed++;
    benchmark::DoNotOptimize(rsci(dp, 3, 1, cfg));
  }
}
BENCHMARK(BM_Rsci)->Unit(benchmark::kMillisecond);

void BM_ObstructionSearch(benchmark::State& state) {
  const long long n = state.range(0);
  const SearchBox box{-n, n, -n, n, -n, n};
  for (auto _ : state) benchmark::DoNotOptimize(obstruction_search(5, 13, 0, 3, box));
  state.SetItemsProcessed(state.iterations() * (2 * n + 1) * (2 * n + 1) * (2 * n + 1));
}
BENCHMARK(BM_ObstructionSearch)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
