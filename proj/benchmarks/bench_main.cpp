#include <benchmark/benchmark.h>

#include <random>

#include "idemca/ca.hpp"
#include "idemca/coding.hpp"
#include "idemca/eraser.hpp"
#include "idemca/finite.hpp"
#include "idemca/language.hpp"
#include "idemca/marker.hpp"
#include "idemca/periodic.hpp"

using namespace idemca;

namespace {

Word random_word(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Word w(length);
    for (auto& s : w) s = static_cast<Symbol>(rng() % 2);
    return w;
}

void BM_SurjectivityAll256(benchmark::State& state) {
    for (auto _ : state) {
        int surjective = 0;
        for (int rule = 0; rule < 256; ++rule)
            surjective += is_surjective(CellularAutomaton::elementary(rule));
        benchmark::DoNotOptimize(surjective);
    }
}
BENCHMARK(BM_SurjectivityAll256);

void BM_DiamondSearch(benchmark::State& state) {
    const CellularAutomaton ca = CellularAutomaton::elementary(136);
    for (auto _ : state) {
        auto diamond = find_diamond(ca);
        benchmark::DoNotOptimize(diamond);
    }
}
BENCHMARK(BM_DiamondSearch);

void BM_MarkerLength200(benchmark::State& state) {
    const Marker marker(2, static_cast<int>(state.range(0)));
    const Word x = random_word(200, 99);
    for (auto _ : state) {
        Word marks = marker.mark_word(x);
        benchmark::DoNotOptimize(marks);
    }
}
BENCHMARK(BM_MarkerLength200)->Arg(2)->Arg(3);

void BM_EraserRewrite(benchmark::State& state) {
    const Eraser eraser = build_eraser(CellularAutomaton::elementary(136));
    const Word x = random_word(400, 7);
    for (auto _ : state) {
        Word out = eraser.rewrite_word(x);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_EraserRewrite);

void BM_EnumeratePeriodic(benchmark::State& state) {
    for (auto _ : state) {
        PeriodicOrbitSet q = enumerate_periodic(2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_EnumeratePeriodic)->Arg(10)->Arg(14);

void BM_EncodeDecode(benchmark::State& state) {
    const CodingKit kit = build_coding_kit(parse_digits("100", 2), 2);
    const AvoidanceCounter counter(parse_digits("100", 2), 2);
    const int n = kit.threshold();
    std::mt19937_64 rng(1);
    const std::uint64_t total = counter.count(n).convert_to<std::uint64_t>();
    for (auto _ : state) {
        const Word u = counter.unrank(BigInt(rng() % total), n);
        Word round = kit.decode(kit.encode(u));
        benchmark::DoNotOptimize(round);
    }
}
BENCHMARK(BM_EncodeDecode);

void BM_MonoidOracle(benchmark::State& state) {
    for (auto _ : state) {
        OracleReport report = monoid_closure_oracle(2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_MonoidOracle)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
