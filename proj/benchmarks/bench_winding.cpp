#include <benchmark/benchmark.h>

#include "reeb/cattorus.hpp"
#include "reeb/curves.hpp"
#include "reeb/lutz_twist.hpp"

namespace {

void BM_WindingAlpha(benchmark::State& state) {
    const reeb::curves::LutzCurve c = reeb::cat::alpha_curve(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reeb::curves::winding_angle(c));
    }
}
BENCHMARK(BM_WindingAlpha)->Arg(0)->Arg(5)->Arg(20);

void BM_WindingTwisted(benchmark::State& state) {
    const reeb::curves::LutzCurve base = reeb::curves::make_segment(0.0, 1.0, 1.0, 0.0, {-1.0, 1.0});
    const reeb::curves::LutzCurve twisted = reeb::curves::full_lutz_twist(base, 0.0, 0.5, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reeb::curves::winding_angle(twisted));
    }
}
BENCHMARK(BM_WindingTwisted);

void BM_CheckContact(benchmark::State& state) {
    const reeb::curves::LutzCurve c = reeb::cat::alpha_curve(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reeb::curves::check_contact(c));
    }
}
BENCHMARK(BM_CheckContact);

}  // namespace
