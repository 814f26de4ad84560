#pragma once

#include "apn/forms.hpp"
#include "apn/matched_pair.hpp"

namespace apn {

// Comultiplications Delta_>(e_i) = sum_{j,k} d(i,j,k) e_j (x) e_k, stored as
// order-3 tensors.
struct Cobracket {
    int dim = 0;
    Tensor3 d_succ;
    Tensor3 d_prec;

    static Cobracket zero(int dim, FieldSpec f) {
        return Cobracket{dim, Tensor3(dim, dim, dim, f), Tensor3(dim, dim, dim, f)};
    }
    FieldSpec field() const { return d_succ.field(); }
    // Delta_*(x) as an n x n matrix in A (x) A.
    Matrix succ_of(const Vec& x) const;
    Matrix prec_of(const Vec& x) const;
    bool operator==(const Cobracket& o) const {
        return dim == o.dim && d_succ == o.d_succ && d_prec == o.d_prec;
    }
};

// Elements of A (x) A are square matrices; T_s: A* -> A of Eq. (YE7) is the
// transpose of the matrix of s under the positional dual identification.
Matrix T_from_s(const Matrix& s);

// Structure constants on A* dual to the cobracket: c*(j,k,i) = d(i,j,k).
struct DualOps {
    BinaryOp succ;
    BinaryOp prec;
};
DualOps dualize_cobracket(const Cobracket& d);
Cobracket cobracket_from_dual_ops(const BinaryOp& succ_star, const BinaryOp& prec_star);

// Direct evaluation of the coalgebra laws (Ca1)-(Ca5) per basis vector,
// cross-checked against the anti-pre-Novikov axioms of the dualized ops.
// Disagreement of the two routes throws (transcription guard).
IdentityReport check_apn_coalgebra(const Cobracket& d, bool quick = false);

// Coalgebra laws plus the algebra axioms plus compatibilities (B1)-(B8).
IdentityReport check_apn_bialgebra(const APNAlgebra& a, const Cobracket& d, bool quick = false);

// The matched pair (A, A*, -(L>* + R<*), R<*, ...) whose validity is
// equivalent to (A, d) being a bialgebra.
NovikovMatchedPair bialgebra_matched_pair(const APNAlgebra& a, const Cobracket& d);

// Compatibility (B-k) alone, evaluated over every basis pair; paired with
// matched_pair_eq_holds(mp, k) these agree equation by equation.
bool bialgebra_compat_holds(const APNAlgebra& a, const Cobracket& d, int k);

// Coboundary comultiplications
//   Delta_>(x) = (I (x) Lstar(x) - L>(x) (x) I) s_succ,
//   Delta_<(x) = (Lo(x) (x) I - I (x) Lodot(x)) s_prec.
Cobracket coboundary_delta(const APNAlgebra& a, const Matrix& s_succ, const Matrix& s_prec);

// The 17 tabulated tensor-placement products; symbols look like "12*13".
extern const std::vector<std::string> kPlacementSymbols;
Tensor3 placement_product(const Matrix& s, const Matrix& sp, const BinaryOp& op,
                          const std::string& placement);

// Left side of the anti-pre-Novikov Yang-Baxter equation
//   s12 o s13 + s23 (.) s13 + s12 < s23.
Tensor3 ybe_residual(const APNAlgebra& a, const Matrix& s);
// Companion residuals P1..P5; which in 1..5.
Tensor3 ybe_companion(const APNAlgebra& a, const Matrix& s, int which);

// Invariance of s: both defining operator combinations vanish for every basis
// x; the operator forms (IE5)-(IE6) are evaluated as well and must agree.
IdentityReport check_invariant(const APNAlgebra& a, const Matrix& s, bool quick = false);

// quasi-triangular: YBE solution with invariant symmetric part;
// triangular: additionally skew; factorizable: T_{s+tau(s)} invertible.
IdentityReport check_quasi_triangular(const APNAlgebra& a, const Matrix& s, bool quick = false);
IdentityReport check_triangular(const APNAlgebra& a, const Matrix& s, bool quick = false);
IdentityReport check_factorizable(const APNAlgebra& a, const Matrix& s, bool quick = false);

// Products on A* induced by s (the dualized coboundary cobracket):
//   zeta >_s eta = R>*(T_tau(s) eta) zeta - Lstar*(T_s zeta) eta, etc.
struct DualProducts {
    BinaryOp succ;
    BinaryOp prec;
    BinaryOp circ;
};
DualProducts dual_products_from_s(const APNAlgebra& a, const Matrix& s);

// s = T - tau(T) on the semidirect product A x V* along the dual
// representation; s solves the APN-YBE there iff T is an O-operator.
struct SemidirectYbe {
    APNAlgebra ahat;
    Matrix s;
};
SemidirectYbe semidirect_ybe_solution(const APNAlgebra& a, const APNRep& rep, const Matrix& T);

// Double of a bialgebra: products (Db1)-(Db2) on A (+) A*, the canonical
// s = sum_i e_i (x) e_i*, and its coboundary cobracket. Always factorizable.
struct DoubleBialgebra {
    APNAlgebra algebra;
    Matrix s;
    Cobracket delta;
    int dim_a = 0;
};
APNAlgebra double_apn_algebra(const APNAlgebra& a, const Cobracket& d);
DoubleBialgebra double_bialgebra(const APNAlgebra& a, const Cobracket& d);

// Unique decomposition x = x1 - x2 along Im(T_s (+) T_tau(s)).
std::pair<Vec, Vec> factorize(const APNAlgebra& a, const Matrix& s, const Vec& x);

// phi(x, zeta) = (x + T_s zeta, x - T_tau(s) zeta): an isomorphism from the
// double algebra of the coboundary bialgebra onto the direct sum A (+) A.
// Verified invertible and a homomorphism on all basis products; returns its
// matrix (rows: A (+) A, columns: A then A*).
Matrix phi_iso(const APNAlgebra& a, const Matrix& s);

// Rota-Baxter laws + quadratic form laws + omega(Px,y)+omega(x,Py)+lambda omega(x,y)=0.
IdentityReport check_quadratic_rb(const APNAlgebra& a, const Matrix& P, const Matrix& omega,
                                  const Scalar& lambda, bool quick = false);

// Factorizable bialgebra <-> quadratic Rota-Baxter structure of weight lambda:
// forward s = (P (omega#)^{-1})^T; backward omega# = -lambda T_{s+tau(s)}^{-1},
// P = T_s omega#.
Matrix rb_to_factorizable(const APNAlgebra& a, const Matrix& P, const Matrix& omega,
                          const Scalar& lambda);
struct QuadraticRb {
    Matrix P;
    Matrix omega;
};
QuadraticRb factorizable_to_rb(const APNAlgebra& a, const Matrix& s, const Scalar& lambda);

// Evaluates P, P1..P5 and P(tau(s)) for an s with invariant symmetric part and
// reports the all-or-nothing equivalence pattern.
struct Ya1Report {
    bool residual_zero = false;       // P(s)
    bool p3_zero = false;             // (b)
    bool p1_p2_zero = false;          // (c)
    bool p4_p5_zero = false;          // (d)
    bool tau_residual_zero = false;   // (e)
    bool equivalent = false;          // all five verdicts coincide
};
Ya1Report theorem_ya1_equivalences(const APNAlgebra& a, const Matrix& s);

}  // namespace apn
