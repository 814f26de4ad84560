#pragma once

#include <cstdint>
#include <random>

#include "apn/algebra.hpp"

namespace apn::testing {

// Fixed-seed generator with modulo sampling so fixtures are identical across
// platforms and runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
    Scalar scalar(FieldSpec f) {
        if (f.is_rational()) return Scalar::of(f, range(-3, 3));
        return Scalar::of(f, below(static_cast<int>(f.p)));
    }
    Vec vec(int n, FieldSpec f) {
        Vec v;
        for (int i = 0; i < n; ++i) v.push_back(scalar(f));
        return v;
    }
    Matrix matrix(int rows, int cols, FieldSpec f) {
        Matrix m(rows, cols, f);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = scalar(f);
        return m;
    }
    Matrix skew(int n, FieldSpec f) {
        Matrix m(n, n, f);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                m.at(i, j) = scalar(f);
                m.at(j, i) = -m.at(i, j);
            }
        return m;
    }
    Tensor3 tensor(int n1, int n2, int n3, FieldSpec f) {
        Tensor3 t(n1, n2, n3, f);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                for (int k = 0; k < n3; ++k) t.at(i, j, k) = scalar(f);
        return t;
    }

private:
    std::mt19937_64 gen_;
};

// e1 o e1 = e1, e2 o e1 = e2.
inline NovikovAlgebra n2(FieldSpec f = FieldSpec::rationals()) {
    NovikovAlgebra a{f, BinaryOp(2, f)};
    a.op.c.at(0, 0, 0) = Scalar::one(f);
    a.op.c.at(1, 0, 1) = Scalar::one(f);
    return a;
}

// e1 > e1 = a e2, everything else zero.
inline APNAlgebra a2(const Scalar& coef) {
    const FieldSpec f = coef.field();
    APNAlgebra a{f, BinaryOp(2, f), BinaryOp(2, f)};
    a.succ.c.at(0, 0, 1) = coef;
    return a;
}

// e1 > e1 = e2, e1 > e2 = e3.
inline APNAlgebra a3(FieldSpec f = FieldSpec::rationals()) {
    APNAlgebra a{f, BinaryOp(3, f), BinaryOp(3, f)};
    a.succ.c.at(0, 0, 1) = Scalar::one(f);
    a.succ.c.at(0, 1, 2) = Scalar::one(f);
    return a;
}

// e > e = p e, e < e = q e.
inline APNAlgebra one_dim(const Scalar& p, const Scalar& q) {
    const FieldSpec f = p.field();
    APNAlgebra a{f, BinaryOp(1, f), BinaryOp(1, f)};
    a.succ.c.at(0, 0, 0) = p;
    a.prec.c.at(0, 0, 0) = q;
    return a;
}

}  // namespace apn::testing
