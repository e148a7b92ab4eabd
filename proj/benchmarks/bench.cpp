#include <benchmark/benchmark.h>

#include "bezout/forge.hpp"
#include "bezout/generalized_inverse.hpp"
#include "bezout/linalg.hpp"
#include "bezout/normal_forms.hpp"
#include "bezout/oracle.hpp"
#include "bezout/similarity.hpp"

using namespace bezout;

namespace {

template <BezoutRing R>
std::vector<Mat<R>> mixed(std::size_t n, int count) {
    SplitMix64 rng(12345);
    GenConfig cfg;
    cfg.ring = R::kind;
    cfg.n = n;
    std::vector<Mat<R>> out;
    for (int i = 0; i < count; ++i) {
        cfg.seed = rng.next();
        out.push_back(gen_mixed_square<R>(rng, cfg));
    }
    return out;
}

template <BezoutRing R>
std::vector<Triple<R>> triples(std::size_t n, int count) {
    std::vector<Triple<R>> out;
    for (int i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.ring = R::kind;
        cfg.n = n;
        cfg.seed = 1000 + i;
        cfg.core_rank = n / 2 + 1;
        out.push_back(gen_flanders_triple<R>(cfg, i % 2 == 0));
    }
    return out;
}

template <BezoutRing R>
void BM_hermite(benchmark::State& state) {
    const auto xs = mixed<R>(static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(column_hermite(xs[i++ % xs.size()]));
}

template <BezoutRing R>
void BM_smith(benchmark::State& state) {
    const auto xs = mixed<R>(static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(smith(xs[i++ % xs.size()]));
}

template <BezoutRing R>
void BM_drazin(benchmark::State& state) {
    const auto xs = mixed<R>(static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(try_drazin(xs[i++ % xs.size()]));
}

template <BezoutRing R>
void BM_oracle(benchmark::State& state) {
    const auto xs = mixed<R>(static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::fraction_field_oracle(xs[i++ % xs.size()]));
}

template <BezoutRing R>
void BM_witness(benchmark::State& state) {
    const auto ts = triples<R>(static_cast<std::size_t>(state.range(0)), 16);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& t = ts[i++ % ts.size()];
        benchmark::DoNotOptimize(conjugate_witnesses(t.a, t.b, t.c));
    }
}

} // namespace

BENCHMARK(BM_hermite<IntegerRing>)->DenseRange(2, 6, 2);
BENCHMARK(BM_hermite<PolyRing>)->DenseRange(2, 4, 1);
BENCHMARK(BM_smith<IntegerRing>)->DenseRange(2, 6, 2);
BENCHMARK(BM_smith<PolyRing>)->DenseRange(2, 4, 1);
BENCHMARK(BM_drazin<IntegerRing>)->DenseRange(2, 6, 2);
BENCHMARK(BM_drazin<PolyRing>)->DenseRange(2, 4, 1);
BENCHMARK(BM_oracle<IntegerRing>)->DenseRange(2, 6, 2);
BENCHMARK(BM_oracle<PolyRing>)->DenseRange(2, 4, 1);
BENCHMARK(BM_witness<IntegerRing>)->DenseRange(2, 5, 1);
BENCHMARK(BM_witness<RationalRing>)->DenseRange(2, 4, 1);
BENCHMARK(BM_witness<PolyRing>)->DenseRange(2, 3, 1);
BENCHMARK_MAIN();
