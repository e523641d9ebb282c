#include <benchmark/benchmark.h>

#include "reeb/cattorus.hpp"
#include "reeb/flow.hpp"

namespace {

void BM_IntegrateReeb(benchmark::State& state) {
    const reeb::curves::LutzCurve c = reeb::cat::alpha_curve(static_cast<unsigned>(state.range(0)));
    const reeb::curves::BottProfile f = reeb::curves::BottProfile::quadratic();
    for (auto _ : state) {
        benchmark::DoNotOptimize(reeb::flow::integrate_reeb(c, f, {0.37, 0.0, 0.0, 0.0}, 10.0, 1e-3));
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_IntegrateReeb)->Arg(0)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
