#pragma once

#include "apn/algebra.hpp"

namespace apn {

// Bimodule of a Novikov algebra: families of dimV x dimV matrices indexed by
// the basis of A.
struct NovikovRep {
    int dimV = 0;
    std::vector<Matrix> l, r;

    Matrix l_of(const Vec& x) const;
    Matrix r_of(const Vec& x) const;
};

// Bimodule of an anti-pre-Novikov algebra.
struct APNRep {
    int dimV = 0;
    std::vector<Matrix> l_succ, r_succ, l_prec, r_prec;

    Matrix l_succ_of(const Vec& x) const;
    Matrix r_succ_of(const Vec& x) const;
    Matrix l_prec_of(const Vec& x) const;
    Matrix r_prec_of(const Vec& x) const;
};

// Dual of a module map under the paper's convention <f*(x)u*,v> = -<u*,f(x)v>;
// with dual bases identified positionally this is the negative transpose.
// Every starred action in this library goes through here.
Matrix star_action(const Matrix& m);

IdentityReport check_novikov_rep(const NovikovAlgebra& a, const NovikovRep& rep, bool quick = false);
IdentityReport check_apn_rep(const APNAlgebra& a, const APNRep& rep, bool quick = false);

NovikovRep regular_novikov_rep(const NovikovAlgebra& a);
APNRep regular_rep(const APNAlgebra& a);

// (V*, -l_star*, -r_succ*, r_odot*, r_circ*); input must be a valid
// representation.
APNRep dual_apn_rep(const APNAlgebra& a, const APNRep& rep);

// The four Novikov representations of the associated algebra:
// (V,-l_succ,-r_prec), (V,l_circ,r_circ), (V*,l_star*,-r_circ*), (V*,-l_odot*,r_prec*).
std::vector<NovikovRep> novikov_reps_from_apn_rep(const APNAlgebra& a, const APNRep& rep);

// Basis order: A first, then V. Throws when the representation is invalid
// (equivalently, when the result would fail the anti-pre-Novikov axioms).
APNAlgebra semidirect_apn(const APNAlgebra& a, const APNRep& rep);
// Same construction without the validity gate; used to exercise the converse
// direction of the semidirect criterion.
APNAlgebra semidirect_apn_unchecked(const APNAlgebra& a, const APNRep& rep);

}  // namespace apn
