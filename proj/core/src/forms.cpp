#include "apn/forms.hpp"

#include <stdexcept>

namespace apn {

namespace {

Scalar form(const Matrix& w, const Vec& x, const Vec& y) {
    return dot(x, w.apply(y));
}

void check_form_shape(const Matrix& omega, int dim) {
    if (!omega.is_square() || omega.rows() != dim)
        throw std::invalid_argument("bilinear form must be square of dim A");
}

}  // namespace

IdentityReport check_quasi_frobenius(const NovikovAlgebra& a, const Matrix& omega, bool quick) {
    check_form_shape(omega, a.dim());
    Checker ck(quick);
    const int n = a.dim();
    ck.require_zero("Qn.sym", {}, omega - omega.transpose());
    if (!ck.done()) ck.require("Qn.nondeg", {}, !determinant(omega).is_zero());
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j)
            for (int k = 0; k < n && !ck.done(); ++k) {
                const Vec x = basis_vec(n, i, a.field);
                const Vec y = basis_vec(n, j, a.field);
                const Vec z = basis_vec(n, k, a.field);
                const Scalar r = form(omega, a.op.mul(x, y), z) -
                                 form(omega, add(a.op.mul(x, z), a.op.mul(z, x)), y) +
                                 form(omega, a.op.mul(z, y), x);
                ck.require_zero("Qn", {i, j, k}, Vec{r});
            }
    return ck.take();
}

IdentityReport check_quadratic_apn(const APNAlgebra& a, const Matrix& omega, bool quick) {
    check_form_shape(omega, a.dim());
    Checker ck(quick);
    const int n = a.dim();
    const BinaryOp circ = a.circ();
    ck.require_zero("C2.sym", {}, omega - omega.transpose());
    if (!ck.done()) ck.require("C2.nondeg", {}, !determinant(omega).is_zero());
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j)
            for (int k = 0; k < n && !ck.done(); ++k) {
                const Vec x = basis_vec(n, i, a.field);
                const Vec y = basis_vec(n, j, a.field);
                const Vec z = basis_vec(n, k, a.field);
                Scalar r = form(omega, a.prec.mul(x, y), z) + form(omega, x, circ.mul(z, y));
                if (!ck.require_zero("C2<", {i, j, k}, Vec{r})) break;
                r = form(omega, a.succ.mul(x, y), z) -
                    form(omega, add(circ.mul(x, z), circ.mul(z, x)), y);
                if (!ck.require_zero("C2>", {i, j, k}, Vec{r})) break;
            }
    return ck.take();
}

APNAlgebra apn_from_quasi_frobenius(const NovikovAlgebra& a, const Matrix& omega) {
    if (!check_quasi_frobenius(a, omega, true).passed)
        throw std::invalid_argument("apn_from_quasi_frobenius: (A, omega) is not quasi-Frobenius");
    const int n = a.dim();
    const auto winv = invert(omega);
    if (!winv) throw std::invalid_argument("degenerate form");
    APNAlgebra out{a.field, BinaryOp(n, a.field), BinaryOp(n, a.field)};
    for (int i = 0; i < n; ++i) {
        const Matrix lstar = a.op.left(i) + a.op.right(i);
        const Matrix m_succ = *winv * lstar.transpose() * omega;  // y -> e_i > y
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.succ.c.at(i, j, k) = m_succ.at(k, j);
    }
    for (int j = 0; j < n; ++j) {
        const Matrix m_prec = -(*winv * a.op.right(j).transpose() * omega);  // x -> x < e_j
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) out.prec.c.at(i, j, k) = m_prec.at(k, i);
    }
    if (!(out.succ + out.prec == a.op))
        throw std::logic_error("compatible splitting does not sum back to the product");
    return out;
}

NovikovMatchedPair double_construction_pair(const APNAlgebra& a, const APNAlgebra& astar) {
    if (a.dim() != astar.dim()) throw std::invalid_argument("dim A and dim A* must agree");
    NovikovMatchedPair mp;
    mp.a = a.associated_unchecked();
    mp.b = astar.associated_unchecked();
    mp.act_a.dimV = astar.dim();
    mp.act_b.dimV = a.dim();
    for (int i = 0; i < a.dim(); ++i) {
        // l_A = -L_odot*, r_A = R_prec* with L_odot = L_succ + R_prec on A
        const Matrix lodot = a.succ.left(i) + a.prec.right(i);
        mp.act_a.l.push_back(-star_action(lodot));
        mp.act_a.r.push_back(star_action(a.prec.right(i)));
        const Matrix lominus = astar.succ.left(i) + astar.prec.right(i);
        mp.act_b.l.push_back(-star_action(lominus));
        mp.act_b.r.push_back(star_action(astar.prec.right(i)));
    }
    return mp;
}

Matrix canonical_double_form(int dim_a, FieldSpec f) {
    Matrix w(2 * dim_a, 2 * dim_a, f);
    for (int i = 0; i < dim_a; ++i) {
        w.at(i, dim_a + i) = Scalar::one(f);
        w.at(dim_a + i, i) = Scalar::one(f);
    }
    return w;
}

DoubleConstruction build_double_construction(const NovikovMatchedPair& mp) {
    if (mp.a.dim() != mp.b.dim())
        throw std::invalid_argument("double construction needs dim A* = dim A");
    NovikovAlgebra sum = build_novikov_sum(mp);  // throws when not matched
    DoubleConstruction dc{std::move(sum), mp.a.dim(), canonical_double_form(mp.a.dim(), mp.a.field)};
    if (!check_quasi_frobenius(dc.algebra, dc.omega, true).passed)
        throw std::invalid_argument("canonical form fails the quasi-Frobenius law on this pair");
    return dc;
}

Matrix omega_sharp(const Matrix& omega) {
    if (determinant(omega).is_zero()) throw std::invalid_argument("degenerate form");
    return omega;
}

Matrix s_omega(const Matrix& omega) {
    const auto winv = invert(omega_sharp(omega));
    // T_s is the transpose of the matrix of s; T_{s_omega} = (omega-sharp)^{-1}.
    return winv->transpose();
}

IdentityReport check_symmetric_rb_qf(const NovikovAlgebra& a, const Matrix& P, const Matrix& omega,
                                     const Scalar& lambda, bool quick) {
    IdentityReport out = check_quasi_frobenius(a, omega, quick);
    if (quick && !out.passed) return out;
    Checker ck(quick);
    const int n = a.dim();
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j) {
            const Vec x = basis_vec(n, i, a.field);
            const Vec y = basis_vec(n, j, a.field);
            const Vec Px = P.apply(x);
            const Vec Py = P.apply(y);
            const Vec inner =
                add(add(a.op.mul(Px, y), a.op.mul(x, Py)), scale(lambda, a.op.mul(x, y)));
            if (!ck.require_zero("RBo", {i, j}, sub(a.op.mul(Px, Py), P.apply(inner)))) break;
            const Scalar fs = form(omega, Px, y) + form(omega, x, Py) + lambda * form(omega, x, y);
            if (!ck.require_zero("Fs1", {i, j}, Vec{fs})) break;
        }
    out.merge(ck.take());
    return out;
}

}  // namespace apn
