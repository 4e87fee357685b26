#include <benchmark/benchmark.h>

#include <random>

#include "cyclotwist/distance.hpp"
#include "cyclotwist/lgroup.hpp"
#include "cyclotwist/products.hpp"
#include "cyclotwist/twist.hpp"

using namespace cyclotwist;

namespace {

BinMatrix random_matrix(std::size_t rows, std::size_t cols) {
    std::mt19937_64 rng(1);
    BinMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t w = 0; w < (cols + 63) / 64; ++w)
            for (std::size_t b = 0; b < 64 && w * 64 + b < cols; ++b)
                if (rng() & 1) m.set(r, w * 64 + b, true);
    return m;
}

void BM_rank(benchmark::State& state) {
    BinMatrix m = random_matrix(state.range(0), 2 * state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rank)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_bp_build(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    CyclicPoly p(3 * q, {0, 1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(bp_build(p, p, 3 * q));
}
BENCHMARK(BM_bp_build)->Arg(5)->Arg(15)->Arg(33);

void BM_catalog_twist(benchmark::State& state) {
    ProductCode code = hgp_family(static_cast<int>(state.range(0)));
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    std::vector<TwistSpec> catalog = twist_catalog_16(code.blueprint);
    for (auto _ : state) {
        TwistReport report = run_twist(code, basis, catalog[0]);
        benchmark::DoNotOptimize(report.max_intermediate_weight);
    }
}
BENCHMARK(BM_catalog_twist)->Arg(3)->Arg(6)->Arg(12);

void BM_bounded_enum_w4(benchmark::State& state) {
    ProductCode code = bp90_build();
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    EnumOptions opts;
    opts.wmax = 4;
    for (auto _ : state) {
        DistanceResult r = bounded_weight_enum(code.code, basis, Pauli::X, opts);
        benchmark::DoNotOptimize(r.certified_lower);
    }
}
BENCHMARK(BM_bounded_enum_w4);

void BM_gl8_order(benchmark::State& state) {
    ProductCode code = hgp_family(3);
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    std::vector<GlElement> gens;
    for (const TwistSpec& spec : twist_catalog_16(code.blueprint))
        gens.push_back(GlElement::from_matrix(run_twist(code, basis, spec).glx));
    for (auto _ : state) benchmark::DoNotOptimize(generated_group_order(gens));
}
BENCHMARK(BM_gl8_order);

}  // namespace

BENCHMARK_MAIN();
