#pragma once

#include "apn/bialgebra.hpp"
#include "apn/representation.hpp"
#include "support.hpp"

namespace apn::testing {

// The worked 4-dimensional coboundary fixture: A = (e1 > e1 = a e2) extended
// by its dual space along the dual regular representation, with
// s = T - tau(T) for T = [[t1,0],[t3,t4]].
struct WorkedFixture {
    APNAlgebra ahat;  // basis (e1, e2, e1*, e2*)
    Matrix s;
    Matrix T;
};

inline WorkedFixture worked_fixture(const Scalar& a, const Scalar& t1, const Scalar& t3,
                                    const Scalar& t4) {
    const FieldSpec f = a.field();
    const APNAlgebra base = a2(a);
    WorkedFixture w{semidirect_apn(base, dual_apn_rep(base, regular_rep(base))),
                    Matrix(4, 4, f), Matrix(2, 2, f)};
    w.T.at(0, 0) = t1;
    w.T.at(1, 0) = t3;
    w.T.at(1, 1) = t4;
    w.s.at(0, 2) = t1;
    w.s.at(1, 2) = t3;
    w.s.at(1, 3) = t4;
    w.s.at(2, 0) = -t1;
    w.s.at(2, 1) = -t3;
    w.s.at(3, 1) = -t4;
    return w;
}

inline APNRep zero_rep(int dimA, int dimV, FieldSpec f) {
    APNRep r;
    r.dimV = dimV;
    for (int i = 0; i < dimA; ++i) {
        r.l_succ.emplace_back(dimV, dimV, f);
        r.r_succ.emplace_back(dimV, dimV, f);
        r.l_prec.emplace_back(dimV, dimV, f);
        r.r_prec.emplace_back(dimV, dimV, f);
    }
    return r;
}

inline APNAlgebra zero_apn(int dim, FieldSpec f) {
    return APNAlgebra{f, BinaryOp::zero(dim, f), BinaryOp::zero(dim, f)};
}

}  // namespace apn::testing
