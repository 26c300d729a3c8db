// Microbenchmarks for the hot paths: structure-constant construction, the
// axiom sweep, the constraint pipeline, and the quotient norm. Not wired
// into ctest; run the binary directly.

#include <benchmark/benchmark.h>

#include <memory>

#include "ljb/bases.hpp"
#include "ljb/reduction.hpp"

namespace {

using namespace ljb;

void bm_structure_constants_canonical(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(LJBAlgebra::full_hermitian(n, 1.0));
    }
}
BENCHMARK(bm_structure_constants_canonical)->Arg(4)->Arg(8)->Arg(16);

void bm_structure_constants_generic(benchmark::State& state) {
    // Non-orthonormal basis, so the dense least-squares path runs.
    const auto basis = gell_mann_basis();
    for (auto _ : state) {
        benchmark::DoNotOptimize(LJBAlgebra::from_basis(1.0, basis));
    }
}
BENCHMARK(bm_structure_constants_generic);

void bm_verify_axioms(benchmark::State& state) {
    const LJBAlgebra alg =
        LJBAlgebra::full_hermitian(static_cast<int>(state.range(0)), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_axioms(alg, 100, 1e-9, 1));
    }
}
BENCHMARK(bm_verify_axioms)->Arg(3)->Arg(6);

void bm_reduce_constraints_qutrit(benchmark::State& state) {
    const auto alg =
        std::make_shared<LJBAlgebra>(LJBAlgebra::full_hermitian(3, 1.0));
    CMat c = CMat::Zero(3, 3);
    c(2, 2) = 1.0;
    const ConstraintSystem cs(alg, {HermitianElement(c)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_constraints(cs, 1e-10));
    }
}
BENCHMARK(bm_reduce_constraints_qutrit);

void bm_reduce_angular_momentum(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    const int lmax = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_angular_momentum(l, lmax));
    }
}
BENCHMARK(bm_reduce_angular_momentum)->Args({0, 1})->Args({1, 2});

void bm_quotient_norm(benchmark::State& state) {
    const auto alg =
        std::make_shared<LJBAlgebra>(LJBAlgebra::full_hermitian(3, 1.0));
    CMat c = CMat::Zero(3, 3);
    c(2, 2) = 1.0;
    const ConstraintSystem cs(alg, {HermitianElement(c)});
    const ReducedAlgebra red = reduce_constraints(cs, 1e-10);
    CMat a = CMat::Zero(3, 3);
    a(0, 0) = 2.0;
    a(1, 1) = -1.0;
    a(2, 2) = 7.0;
    const RVec coords = alg->coordinates(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quotient_norm(red, coords, 1e-8));
    }
}
BENCHMARK(bm_quotient_norm);

} // namespace

BENCHMARK_MAIN();
