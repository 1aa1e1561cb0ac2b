#include <rainbowsat/canonical.hpp>
#include <rainbowsat/colorability.hpp>
#include <rainbowsat/constructions.hpp>
#include <rainbowsat/sat_numbers.hpp>
#include <rainbowsat/saturation.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace rainbowsat;

namespace {
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    void canonical_random(benchmark::State &state)
    {
        auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
        for (auto _ : state)
            benchmark::DoNotOptimize(canonical_form(g));
    }
    BENCHMARK(canonical_random)->Arg(10)->Arg(20)->Arg(40)->Arg(64);

    void canonical_wheel(benchmark::State &state)
    {
        auto g = wheel_graph(static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(canonical_form(g));
    }
    BENCHMARK(canonical_wheel)->Arg(16)->Arg(64);

    void colorability_wheel_c4(benchmark::State &state)
    {
        const int n = static_cast<int>(state.range(0));
        std::vector<Pattern> c4{Pattern(cycle_graph(4))};
        auto g = wheel_graph(n).with_edge({0, 2});
        for (auto _ : state)
            benchmark::DoNotOptimize(rainbow_free_colorable(g, c4));
    }
    BENCHMARK(colorability_wheel_c4)->Arg(8)->Arg(12)->Arg(16);

    void colorability_k6_k4(benchmark::State &state)
    {
        std::vector<Pattern> k4{Pattern(complete_graph(4))};
        auto g = complete_graph(6);
        for (auto _ : state)
            benchmark::DoNotOptimize(rainbow_free_colorable(g, k4));
    }
    BENCHMARK(colorability_k6_k4);

    void saturation_p4_construction(benchmark::State &state)
    {
        std::vector<Pattern> p4{Pattern(path_graph(4))};
        auto c = p4_construction(static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(is_rainbow_saturated(c.graph, p4));
    }
    BENCHMARK(saturation_p4_construction)->Arg(16)->Arg(18);

    void enumerate_graphs(benchmark::State &state)
    {
        const int n = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_nonisomorphic_graphs(n, n * (n - 1) / 2));
    }
    BENCHMARK(enumerate_graphs)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

    void sat_star_c4(benchmark::State &state)
    {
        std::vector<Pattern> c4{Pattern(cycle_graph(4))};
        for (auto _ : state)
            benchmark::DoNotOptimize(sat_star_exact(static_cast<int>(state.range(0)), c4));
    }
    BENCHMARK(sat_star_c4)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
}
BENCHMARK_MAIN();
