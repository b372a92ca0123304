#include "cohomotopy/simplicial/constructions.hpp"
#include "cohomotopy/simplicial/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cohomotopy;
using namespace cohomotopy::simplicial;

namespace {

const SimplicialComplex& target() {
    static const SimplicialComplex k = suspension(suspension(complex_projective_plane()));
    return k;
}

kernels::Bits random_bits(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    kernels::Bits b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1);
    return b;
}

template <bool Parallel>
void cup_i(benchmark::State& state) {
    const auto& k = target();
    const int p = static_cast<int>(state.range(0));
    const int i = static_cast<int>(state.range(1));
    const auto plan = kernels::make_cup_plan(p, p, i);
    const auto u = random_bits(k.count(p), 1), v = random_bits(k.count(p), 2);
    for (auto _ : state) {
        auto w = Parallel ? kernels::cup_i_parallel(k, plan, u, v) : kernels::cup_i_serial(k, plan, u, v);
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * k.count(plan.n)));
}

template <bool Parallel>
void coboundary(benchmark::State& state) {
    const auto& k = target();
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    IntVector u(k.count(d));
    for (auto& x : u) x = static_cast<long long>(rng() % 19) - 9;
    for (auto _ : state) {
        auto w = Parallel ? kernels::coboundary_parallel(k, d, u) : kernels::coboundary_serial(k, d, u);
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * k.count(d + 1)));
}

template <bool Parallel>
void coboundary_bits(benchmark::State& state) {
    const auto& k = target();
    const int d = static_cast<int>(state.range(0));
    const auto u = random_bits(k.count(d), 4);
    for (auto _ : state) {
        auto w = Parallel ? kernels::coboundary_bits_parallel(k, d, u) : kernels::coboundary_bits_serial(k, d, u);
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * k.count(d + 1)));
}

} // namespace

BENCHMARK(cup_i<false>)->Name("cup_i/serial")->Args({2, 0})->Args({3, 1})->Args({3, 2});
BENCHMARK(cup_i<true>)->Name("cup_i/parallel")->Args({2, 0})->Args({3, 1})->Args({3, 2});
BENCHMARK(coboundary<false>)->Name("coboundary/serial")->Arg(2)->Arg(4);
BENCHMARK(coboundary<true>)->Name("coboundary/parallel")->Arg(2)->Arg(4);
BENCHMARK(coboundary_bits<false>)->Name("coboundary_bits/serial")->Arg(2)->Arg(4);
BENCHMARK(coboundary_bits<true>)->Name("coboundary_bits/parallel")->Arg(2)->Arg(4);

BENCHMARK_MAIN();
