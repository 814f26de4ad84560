#pragma once

#include "apn/matched_pair.hpp"

namespace apn {

// Bilinear forms are square matrices w(i,j) = omega(e_i, e_j); under the
// positional dual identification omega-sharp is exactly this matrix.

// Symmetry, nondegeneracy (exact determinant), and
// (Qn): w(xoy,z) - w(xoz+zox,y) + w(zoy,x) = 0.
IdentityReport check_quasi_frobenius(const NovikovAlgebra& a, const Matrix& omega,
                                     bool quick = false);

// Symmetry, nondegeneracy, and the invariance pair
// (C2): w(x<y,z) = -w(x,zoy) and w(x>y,z) = w(xoz+zox,y).
IdentityReport check_quadratic_apn(const APNAlgebra& a, const Matrix& omega, bool quick = false);

// Compatible splitting of a symmetric quasi-Frobenius Novikov algebra:
// e_i > e_j = W^{-1} Lstar(e_i)^T W e_j, e_i < e_j = -W^{-1} Rcirc(e_j)^T W e_i.
// The result sums back to o exactly and is quadratic for the same omega.
APNAlgebra apn_from_quasi_frobenius(const NovikovAlgebra& a, const Matrix& omega);

struct DoubleConstruction {
    NovikovAlgebra algebra;  // on A (+) A*, A-range first
    int dim_a = 0;           // size of the A block
    Matrix omega;            // canonical pairing, block anti-diagonal
};

// The matched pair carrying the canonical dual actions
// (-L_odot*, R_prec*, -L_ominus*, R_prec_{A*}*) of two anti-pre-Novikov
// algebras on each other's dual space.
NovikovMatchedPair double_construction_pair(const APNAlgebra& a, const APNAlgebra& astar);

// Builds the sum Novikov algebra of such a pair and attaches the canonical
// form; throws when the pair is not matched or the form fails (Qn).
DoubleConstruction build_double_construction(const NovikovMatchedPair& mp);

// omega-sharp as a matrix, and the tensor s_omega with T_{s_omega} = (omega-sharp)^{-1}.
Matrix omega_sharp(const Matrix& omega);
Matrix s_omega(const Matrix& omega);

// Canonical pairing on A (+) A*: omega(x+a, y+b) = <x,b> + <a,y>.
Matrix canonical_double_form(int dim_a, FieldSpec f);

// Rota-Baxter Novikov law plus (Qn) plus the compatibility
// (Fs1): w(Px,y) + w(x,Py) + lambda w(x,y) = 0.
IdentityReport check_symmetric_rb_qf(const NovikovAlgebra& a, const Matrix& P, const Matrix& omega,
                                     const Scalar& lambda, bool quick = false);

}  // namespace apn
