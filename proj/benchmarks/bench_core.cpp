#include <benchmark/benchmark.h>

#include <random>

#include "ringcode/analysis.hpp"
#include "ringcode/cyclic_code.hpp"

using namespace ringcode;

namespace {

void BM_FieldMul(benchmark::State& state) {
    Fq f(2, static_cast<std::uint32_t>(state.range(0)));
    std::mt19937 rng(1);
    const fq_t a = static_cast<fq_t>(rng() % f.q());
    fq_t b = static_cast<fq_t>(rng() % f.q());
    for (auto _ : state) {
        b = f.mul(a, b ? b : f.one());
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(6);

void BM_RingElemMul(benchmark::State& state) {
    const auto spec = RingSpec::make(RingFamily::T, 3, 2, make_field(2, 2));
    std::mt19937 rng(2);
    const std::uint64_t total = spec.size().value();
    const RingElem a = spec.element_at(rng() % total);
    RingElem b = spec.element_at(rng() % total);
    for (auto _ : state) {
        b = spec.mul(a, spec.is_zero(b) ? spec.one() : b);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_RingElemMul);

void BM_RowReduce(benchmark::State& state) {
    const auto f2 = make_field(2, 1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(3);
    FqMatrix m(f2, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = static_cast<fq_t>(rng() % 2);
    for (auto _ : state) {
        FqMatrix copy = m;
        benchmark::DoNotOptimize(copy.row_reduce());
    }
}
BENCHMARK(BM_RowReduce)->Arg(32)->Arg(128);

void BM_CodeBuild(benchmark::State& state) {
    const auto spec = RingSpec::make(RingFamily::R, 2, 1, make_field(2, 1));
    const QuotientCtx ctx(spec, static_cast<std::uint32_t>(state.range(0)));
    const RingPoly g = poly_parse(spec, "{1}*x+{1}");
    for (auto _ : state) {
        benchmark::DoNotOptimize(code_build(ctx, {g}).rank());
    }
}
BENCHMARK(BM_CodeBuild)->Arg(7)->Arg(15)->Arg(31);

void BM_MinDistance(benchmark::State& state) {
    const auto spec = RingSpec::field_ring(make_field(2, 1));
    const QuotientCtx ctx(spec, 15);
    const CyclicCode code = code_build(ctx, {poly_parse(spec, "{1}*x^4+{1}*x+{1}")});
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(code));
    }
}
BENCHMARK(BM_MinDistance);

void BM_IsLocal(benchmark::State& state) {
    const auto spec = RingSpec::make(RingFamily::S, 2, 1, make_field(2, 1));
    const QuotientCtx ctx(spec, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_local(AlgebraView(ctx)).verdict);
    }
}
BENCHMARK(BM_IsLocal)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
