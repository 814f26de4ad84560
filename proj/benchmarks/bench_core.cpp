#include <benchmark/benchmark.h>

#include "apn/bialgebra.hpp"
#include "apn/search.hpp"

using namespace apn;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::gf(5);

APNAlgebra a3_fixture(FieldSpec f) {
    APNAlgebra a{f, BinaryOp(3, f), BinaryOp(3, f)};
    a.succ.c.at(0, 0, 1) = Scalar::one(f);
    a.succ.c.at(0, 1, 2) = Scalar::one(f);
    return a;
}

// Deterministic filler, dense rational entries.
Matrix filled(int n, FieldSpec f) {
    Matrix m(n, n, f);
    long v = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = Scalar::of(f, (v % 7) - 3, 1 + (v % 3));
            v = v * 31 % 1009;
        }
    return m;
}

APNAlgebra double_fixture(int half_dim) {
    const APNAlgebra base = half_dim == 3 ? a3_fixture(Q) : a3_fixture(Q);
    return double_bialgebra(base, Cobracket::zero(3, Q)).algebra;
}

void BM_check_apn(benchmark::State& state) {
    const APNAlgebra a = state.range(0) == 3
                             ? a3_fixture(Q)
                             : semidirect_apn(a3_fixture(Q), regular_rep(a3_fixture(Q)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_apn(a, true).passed);
    }
}
BENCHMARK(BM_check_apn)->Arg(3)->Arg(6);

void BM_ybe_residual(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    APNAlgebra a{Q, BinaryOp(n, Q), BinaryOp(n, Q)};
    if (n == 3) a = a3_fixture(Q);
    if (n == 6) a = double_fixture(3);
    const Matrix s = filled(n, Q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ybe_residual(a, s).is_zero());
    }
}
BENCHMARK(BM_ybe_residual)->Arg(3)->Arg(6);

void BM_bialgebra_check(benchmark::State& state) {
    const APNAlgebra a = a3_fixture(Q);
    Matrix s(3, 3, Q);
    s.at(0, 1) = Scalar::one(Q);
    s.at(1, 0) = -Scalar::one(Q);
    const Cobracket d = coboundary_delta(a, s, s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_apn_bialgebra(a, d, true).passed);
    }
}
BENCHMARK(BM_bialgebra_check);

void BM_solve_linear(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix m = filled(n, Q);
    Vec b;
    for (int i = 0; i < n; ++i) b.push_back(Scalar::of(Q, i + 1, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_linear(m, b).has_value());
    }
}
BENCHMARK(BM_solve_linear)->Arg(4)->Arg(8)->Arg(12);

void BM_enumerate_apn_gf3(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_apn(2, FieldSpec::gf(3), 1).algebras.size());
    }
}
BENCHMARK(BM_enumerate_apn_gf3);

void BM_placement_product(benchmark::State& state) {
    const APNAlgebra a = double_fixture(3);
    const Matrix s = filled(6, Q);
    const BinaryOp circ = a.succ + a.prec;
    for (auto _ : state) {
        benchmark::DoNotOptimize(placement_product(s, s, circ, "12*13").is_zero());
    }
}
BENCHMARK(BM_placement_product);

void BM_o_operator_search_gf5(benchmark::State& state) {
    APNAlgebra a{F5, BinaryOp(2, F5), BinaryOp(2, F5)};
    a.succ.c.at(0, 0, 1) = Scalar::one(F5);
    const APNRep reg = regular_rep(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_o_operators(a, reg, default_grid(F5)).items.size());
    }
}
BENCHMARK(BM_o_operator_search_gf5);

}  // namespace

BENCHMARK_MAIN();
