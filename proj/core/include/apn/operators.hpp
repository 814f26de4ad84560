#pragma once

#include "apn/representation.hpp"

namespace apn {

// Linear maps T: V -> A are plain dimA x dimV matrices in the fixed bases.

// (Ao10): T(u) o T(v) = -T(l(T(u))v + r(T(v))u) on all basis pairs of V.
IdentityReport check_anti_o_operator(const NovikovAlgebra& a, const NovikovRep& rep,
                                     const Matrix& T, bool quick = false);

// The strong condition (Ao1) on basis triples of V; callers usually gate on
// check_anti_o_operator first.
IdentityReport check_strong_anti_o(const NovikovAlgebra& a, const NovikovRep& rep, const Matrix& T,
                                   bool quick = false);

// u > v = -l(T(u))v, u < v = -r(T(v))u on V. For any anti-O-operator the
// partial identities (Ao3)-(Ao5) hold; the full axiom set holds exactly when
// T is strong, which the report records.
struct InducedAPN {
    BinaryOp succ;
    BinaryOp prec;
    IdentityReport partial;  // (Ao3)-(Ao5)
    bool strong = false;

    APNAlgebra as_apn(FieldSpec f) const { return APNAlgebra{f, succ, prec}; }
};
InducedAPN induced_apn_from_anti_o(const NovikovAlgebra& a, const NovikovRep& rep, const Matrix& T);

// Transports the induced splitting along an invertible anti-O-operator:
// x > y = -T(l(x)T^{-1}y), x < y = -T(r(y)T^{-1}x); the two parts sum to o.
APNAlgebra compatible_apn_from_invertible_anti_o(const NovikovAlgebra& a, const NovikovRep& rep,
                                                 const Matrix& T);

// O-operator on a Novikov algebra: T(u) o T(v) = T(l(Tu)v + r(Tv)u).
IdentityReport check_o_operator_novikov(const NovikovAlgebra& a, const NovikovRep& rep,
                                        const Matrix& T, bool quick = false);

// O-operator on an anti-pre-Novikov algebra: T(u)*T(v) = T(l_*(Tu)v + r_*(Tv)u)
// for * in {>, <}.
IdentityReport check_o_operator_apn(const APNAlgebra& a, const APNRep& rep, const Matrix& T,
                                    bool quick = false);

// Rota-Baxter operator of weight lambda on (A, >, <).
IdentityReport check_rota_baxter_apn(const APNAlgebra& a, const Matrix& P, const Scalar& lambda,
                                     bool quick = false);

// Anti-Rota-Baxter operator on a Novikov algebra:
// T(x) o T(y) = -T(T(x) o y + x o T(y)), the regular-representation case of (Ao10).
IdentityReport check_anti_rota_baxter(const NovikovAlgebra& a, const Matrix& T, bool quick = false);
// [T(x),T(y)] o z + y o (T(x) o T(z)) - x o (T(y) o T(z)) = 0.
IdentityReport check_strong_anti_rota_baxter(const NovikovAlgebra& a, const Matrix& T,
                                             bool quick = false);

// Module space V carrying both a representation of A and its own pair of
// operations, compatible in the sense of the A-anti-pre-Novikov conditions.
struct AAPNStructure {
    APNAlgebra host;
    APNRep rep;
    BinaryOp v_succ;
    BinaryOp v_prec;
};

// Direct check of the displayed condition list, cross-validated against the
// equivalent statement that A (+) V with the glued operations is an
// anti-pre-Novikov algebra; disagreement of the two routes throws.
IdentityReport check_a_apn_algebra(const AAPNStructure& s, bool quick = false);

// The glued algebra on A (+) V used by the cross-check (A basis first).
APNAlgebra a_apn_sum(const AAPNStructure& s);

// Relative Rota-Baxter operator of weight lambda:
// T(u)*T(v) = T(l_*(Tu)v + r_*(Tv)u + lambda u *_V v).
IdentityReport check_relative_rb(const AAPNStructure& s, const Matrix& T, const Scalar& lambda,
                                 bool quick = false);

// The A-anti-pre-Novikov algebra on A* induced by a symmetric invariant
// tensor w: zeta >= eta = -L_star*(T_w zeta) eta, zeta <= eta = R_odot*(T_w zeta) eta,
// with the dual regular representation. Invariance of w is the caller's
// obligation.
AAPNStructure aapn_from_symmetric_invariant(const APNAlgebra& a, const Matrix& w);

}  // namespace apn
