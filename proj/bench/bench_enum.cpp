// Serial vs OpenMP strategy enumeration on 2-D games where Eve loses, so the
// whole strategy space is scanned.

#include <benchmark/benchmark.h>

#include "hdsim/solvers.hpp"
#include "hdsim/strategy_enum.hpp"
#include "support.hpp"

using namespace hdsim;

namespace {

// Ring of Eve vertices, each choosing between two edges labelled so that
// every cycle has an even first and odd second maximum.
TwoDimGame losing_ring(int n)
{
    TwoDimGame g;
    g.arena.vertex_count = 0;
    for (int v = 0; v < n; ++v) g.arena.add_vertex(Player::Eve);
    for (int v = 0; v < n; ++v) {
        g.arena.edges.push_back({v, (v + 1) % n});
        g.priority.push_back({2, 1});
        g.arena.edges.push_back({v, (v + 2) % n});
        g.priority.push_back({2, 1});
    }
    g.max_p1 = 2;
    g.max_p2 = 1;
    return g;
}

void run(benchmark::State& state, Exec exec)
{
    const auto g = losing_ring(static_cast<int>(state.range(0)));
    StrategySpace space(g.arena, Player::Eve);
    auto pred = [&](const PositionalStrategy& s) { return verify_eve_strategy(g, s); };
    for (auto _ : state) benchmark::DoNotOptimize(first_strategy(space, pred, exec));
    state.counters["strategies"] = static_cast<double>(space.size());
}

void BM_EnumSerial(benchmark::State& state) { run(state, Exec::Serial); }
void BM_EnumParallel(benchmark::State& state) { run(state, Exec::Parallel); }

} // namespace

BENCHMARK(BM_EnumSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
