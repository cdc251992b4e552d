// Serial reference vs OpenMP kernels: Hochster sums and the conjecture search.
#include <benchmark/benchmark.h>

#include "expanse/conjecture.hpp"
#include "expanse/expansion.hpp"
#include "expanse/homology.hpp"
#include "expanse/hypergraph.hpp"
#include "expanse/random.hpp"

namespace {

expanse::SimplicialComplex expanded_graph_complex(int extra) {
    const auto g = expanse::Hypergraph::from_named_edges(
        {"1", "2", "3", "4", "5"}, {{"1", "2"}, {"1", "4"}, {"1", "5"}, {"2", "3"}, {"2", "4"}, {"2", "5"}, {"3", "4"}});
    std::vector<int> s{2, 2, 3, 2, 3};
    for (int k = 0; k < extra; ++k)
        ++s[k % 5];
    return expanse::independence_complex(expanse::expand_hypergraph(g, expanse::ExpansionVector(s)));
}

expanse::HochsterOptions wide() {
    expanse::HochsterOptions o;
    o.max_variables = 16;
    return o;
}

void BM_HochsterSerial(benchmark::State& state) {
    const auto complex = expanded_graph_complex(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(expanse::betti_numbers_hochster_serial(complex, expanse::FieldChoice::rationals(), wide()));
    state.SetLabel(std::to_string(complex.vertex_count()) + " vertices");
}

void BM_HochsterParallel(benchmark::State& state) {
    const auto complex = expanded_graph_complex(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(expanse::betti_numbers_hochster(complex, expanse::FieldChoice::rationals(), wide()));
    state.SetLabel(std::to_string(complex.vertex_count()) + " vertices");
}

void BM_HochsterRandom(benchmark::State& state) {
    auto rng = expanse::random::trial_rng(7, 0);
    const auto base = expanse::random::random_complex(rng, 6, 6, 2, 4);
    const auto complex = expanse::expand_complex(base, expanse::ExpansionVector({2, 2, 2, 2, 2, 2}));
    for (auto _ : state)
        benchmark::DoNotOptimize(expanse::betti_numbers_hochster(complex, expanse::FieldChoice::prime_field(32003), wide()));
}

void BM_ConjectureSerial(benchmark::State& state) {
    expanse::ConjectureSearchOptions o;
    o.trials = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(expanse::search_conjecture_serial(o));
}

void BM_ConjectureParallel(benchmark::State& state) {
    expanse::ConjectureSearchOptions o;
    o.trials = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(expanse::search_conjecture(o));
}

}  // namespace

BENCHMARK(BM_HochsterSerial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HochsterParallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HochsterRandom)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjectureSerial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjectureParallel)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
