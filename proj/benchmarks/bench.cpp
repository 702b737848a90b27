#include "hcolor/coloring.hpp"
#include "hcolor/dynamics.hpp"
#include "hcolor/goodness.hpp"
#include "hcolor/hypergraph.hpp"
#include "hcolor/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace hcolor;

namespace {

// Targeted instance: m = nΔ/(2k) edges, well below saturation.
Hypergraph instance(std::size_t n, std::size_t k, std::size_t max_degree, std::uint64_t seed) {
    GeneratorOptions o;
    o.max_degree = max_degree;
    o.target_edges = n * max_degree / (2 * k);
    return generate_random_simple(n, k, o, seed).graph;
}

} // namespace

static void BM_GlauberStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto h = instance(n, 3, 8, 1);
    Rng rng(7);
    ChainState s{random_initial(h.vertex_count(), 64, rng), 0, Rng(11)};
    for (auto _ : state) {
        step(h, s);
        benchmark::DoNotOptimize(s.coloring);
    }
}
BENCHMARK(BM_GlauberStep)->Arg(1000)->Arg(100000);

static void BM_Profile(benchmark::State& state) {
    auto h = instance(10000, 4, static_cast<std::size_t>(state.range(0)), 2);
    Rng rng(3);
    auto x = random_initial(h.vertex_count(), 16, rng);
    Vertex v = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(profile(h, x, v));
        v = (v + 1) % h.vertex_count();
    }
}
BENCHMARK(BM_Profile)->Arg(4)->Arg(32);

static void BM_EnumerateProper(benchmark::State& state) {
    auto h = generate_random_simple(10, 3, 3, 5);
    const auto q = static_cast<Color>(state.range(0));
    for (auto _ : state) {
        auto r = enumerate_proper(h, q, nullptr, {});
        benchmark::DoNotOptimize(r.proper.size());
    }
}
BENCHMARK(BM_EnumerateProper)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
