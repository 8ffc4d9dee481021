// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <vector>

#include "susyq/design.hpp"
#include "susyq/grid.hpp"
#include "susyq/oracle.hpp"
#include "susyq/partner.hpp"

namespace {

using namespace susyq;

std::vector<SeedSolution> quartic_seeds() {
  return {make_seed(-2.5, Parity::odd), make_seed(-1.5, Parity::even),
          make_seed(-0.5, Parity::odd), make_seed(0.5, Parity::even)};
}

Grid grid_of(benchmark::State& state) {
  Grid g;
  g.x_max = 6.0;
  g.n = static_cast<int>(state.range(0));
  return g;
}

template <bool Parallel>
void BM_Tabulate(benchmark::State& state) {
  const PartnerPotential p(quartic_seeds());
  const RealFunction v = [&](double x) { return partner_v(p, x); };
  const auto xs = grid_of(state).interior();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? tabulate(v, xs) : tabulate_serial(v, xs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}

template <bool Parallel>
void BM_Eigenvalues(benchmark::State& state) {
  Grid g;
  g.n = static_cast<int>(state.range(0));
  const auto t = oracle::discretize([](double x) { return 0.5 * x * x; }, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? oracle::eigenvalues_low(t, 10)
                                      : oracle::eigenvalues_low_serial(t, 10));
  }
}

template <bool Parallel>
void BM_ScanSingularities(benchmark::State& state) {
  // two odd seeds straddling the odd level 3.5: W has a zero
  const std::vector<SeedSolution> seeds{make_seed(2.6, Parity::odd), make_seed(3.6, Parity::odd)};
  const Grid g = grid_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? design::scan_singularities(seeds, g)
                                      : design::scan_singularities_serial(seeds, g));
  }
}

}  // namespace

BENCHMARK(BM_Tabulate<false>)->Name("tabulate/serial")->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tabulate<true>)->Name("tabulate/parallel")->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eigenvalues<false>)->Name("eigenvalues_low/serial")->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eigenvalues<true>)->Name("eigenvalues_low/parallel")->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSingularities<false>)->Name("scan_singularities/serial")->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSingularities<true>)->Name("scan_singularities/parallel")->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
