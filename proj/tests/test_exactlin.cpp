#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apn/linalg.hpp"
#include "apn/tensor3.hpp"
#include "support.hpp"

using namespace apn;
using apn::testing::Rng;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::gf(5);
}  // namespace

TEST_CASE("scalar arithmetic is exact over Q and GF(5)") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        for (FieldSpec f : {Q, F5}) {
            const Scalar a = rng.scalar(f);
            const Scalar b = rng.scalar(f);
            CHECK((a + b) - b == a);
            CHECK(a * b == b * a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
    const Scalar third = Scalar::of(Q, 1, 3);
    const Scalar sixth = Scalar::of(Q, 1, 6);
    CHECK((third + sixth).str() == "1/2");
    CHECK(Scalar::of(Q, 2, 4).str() == "1/2");
    CHECK(Scalar::of(F5, -1).str() == "4");
    CHECK((Scalar::of(F5, 2) / Scalar::of(F5, 3)).str() == "4");  // 2 * 3^{-1} = 2*2
}

TEST_CASE("scalar parsing and field guards") {
    CHECK(Scalar::parse(Q, "-7/2").str() == "-7/2");
    CHECK(Scalar::parse(F5, "7").str() == "2");
    CHECK_THROWS_AS(Scalar::parse(F5, "1/3"), FieldMismatch);
    CHECK(Scalar::parse(F5, "1/3", true).str() == "2");  // 3^{-1} = 2 mod 5
    CHECK_THROWS(Scalar::parse(Q, "x"));
    CHECK_THROWS(Scalar::parse(Q, "1/0"));
    CHECK_THROWS_AS(Scalar::of(Q, 1) + Scalar::of(F5, 1), FieldMismatch);
    CHECK_THROWS_AS(FieldSpec::gf(6), std::invalid_argument);
}

TEST_CASE("solve_linear identity and rank-deficient cases") {
    Matrix id = Matrix::identity(2, Q);
    Vec b{Scalar::of(Q, 3), Scalar::of(Q, 5)};
    auto x = solve_linear(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix m(2, 2, Q);
    m.at(0, 0) = Scalar::of(Q, 1);
    m.at(0, 1) = Scalar::of(Q, 2);
    m.at(1, 0) = Scalar::of(Q, 2);
    m.at(1, 1) = Scalar::of(Q, 4);
    x = solve_linear(m, Vec{Scalar::of(Q, 1), Scalar::of(Q, 2)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{Scalar::of(Q, 1), Scalar::of(Q, 2)});
    CHECK(*x == Vec{Scalar::of(Q, 1), Scalar::zero(Q)});  // free variable pinned to zero

    CHECK_FALSE(solve_linear(m, Vec{Scalar::of(Q, 1), Scalar::of(Q, 3)}).has_value());
}

TEST_CASE("solve_linear agrees with back-substitution on random systems") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        const FieldSpec f = t % 2 == 0 ? Q : F5;
        const int rows = rng.range(1, 4);
        const int cols = rng.range(1, 4);
        const Matrix m = rng.matrix(rows, cols, f);
        const Vec b = rng.vec(rows, f);
        const auto x = solve_linear(m, b);
        if (x) CHECK(m.apply(*x) == b);  // solve_linear re-checks internally as well
    }
}

TEST_CASE("invert examples") {
    CHECK(*invert(Matrix::identity(3, Q)) == Matrix::identity(3, Q));

    Matrix swp(2, 2, Q);
    swp.at(0, 1) = Scalar::of(Q, 1);
    swp.at(1, 0) = Scalar::of(Q, 1);
    CHECK(*invert(swp) == swp);

    Matrix ones(2, 2, Q);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.at(i, j) = Scalar::of(Q, 1);
    CHECK_FALSE(invert(ones).has_value());
    CHECK(determinant(ones).is_zero());

    Matrix rect(2, 3, Q);
    CHECK_THROWS_AS(invert(rect), std::invalid_argument);

    Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        const FieldSpec f = t % 2 == 0 ? Q : F5;
        const int n = rng.range(1, 4);
        const Matrix m = rng.matrix(n, n, f);
        const auto inv = invert(m);
        CHECK(inv.has_value() == !determinant(m).is_zero());
        if (inv) CHECK(m * *inv == Matrix::identity(n, f));
    }
}

TEST_CASE("tau2 on symmetric, indicator and skew inputs") {
    Rng rng(41);
    Matrix ind(2, 2, Q);
    ind.at(0, 1) = Scalar::of(Q, 1);  // e1 (x) e2
    Matrix expect(2, 2, Q);
    expect.at(1, 0) = Scalar::of(Q, 1);
    CHECK(tau2(ind) == expect);

    const Matrix sk = rng.skew(3, Q);
    CHECK(tau2(sk) == -sk);
    const Matrix sym = sk * sk;  // skew^2 is symmetric
    CHECK(tau2(sym) == sym);
    CHECK_THROWS_AS(tau2(Matrix(2, 3, Q)), std::invalid_argument);
}

TEST_CASE("permute3 identity, indicators and involution") {
    Rng rng(43);
    const Tensor3 t = rng.tensor(2, 3, 4, F5);
    CHECK(permute3(t, Perm3::identity()) == t);

    Tensor3 ind(3, 3, 3, Q);
    ind.at(0, 1, 2) = Scalar::of(Q, 1);  // e1 (x) e2 (x) e3
    const Tensor3 got = permute3(ind, Perm3::swap13());
    Tensor3 expect(3, 3, 3, Q);
    expect.at(2, 1, 0) = Scalar::of(Q, 1);  // e3 (x) e2 (x) e1
    CHECK(got == expect);

    const Tensor3 u = rng.tensor(3, 3, 3, F5);
    CHECK(permute3(permute3(u, Perm3::swap12()), Perm3::swap12()) == u);
}

TEST_CASE("permute3 respects composition") {
    Rng rng(47);
    const Perm3 all[6] = {Perm3::identity(), Perm3::swap12(),   Perm3::swap13(),
                          Perm3::swap23(),   Perm3::cycle132(), Perm3::cycle132().inverse()};
    for (int t = 0; t < 30; ++t) {
        const Tensor3 u = rng.tensor(3, 3, 3, F5);
        const Perm3 sigma = all[rng.below(6)];
        const Perm3 rho = all[rng.below(6)];
        CHECK(permute3(u, sigma.after(rho)) == permute3(permute3(u, rho), sigma));
        CHECK(permute3(permute3(u, sigma), sigma.inverse()) == u);
    }
}
