#include "apn/operators.hpp"

#include <stdexcept>

namespace apn {

namespace {

Vec column(const Matrix& m, int j) {
    Vec v = zero_vec(m.rows(), m.field());
    for (int i = 0; i < m.rows(); ++i) v[static_cast<size_t>(i)] = m.at(i, j);
    return v;
}

}  // namespace

IdentityReport check_anti_o_operator(const NovikovAlgebra& a, const NovikovRep& rep,
                                     const Matrix& T, bool quick) {
    if (T.rows() != a.dim() || T.cols() != rep.dimV)
        throw std::invalid_argument("T must map V into A");
    Checker ck(quick);
    const int m = rep.dimV;
    for (int u = 0; u < m && !ck.done(); ++u)
        for (int v = 0; v < m && !ck.done(); ++v) {
            const Vec Tu = column(T, u);
            const Vec Tv = column(T, v);
            const Vec uu = basis_vec(m, u, T.field());
            const Vec vv = basis_vec(m, v, T.field());
            const Vec inner = add(rep.l_of(Tu).apply(vv), rep.r_of(Tv).apply(uu));
            const Vec r = add(a.op.mul(Tu, Tv), T.apply(inner));
            ck.require_zero("Ao10", {u, v}, r);
        }
    return ck.take();
}

IdentityReport check_strong_anti_o(const NovikovAlgebra& a, const NovikovRep& rep, const Matrix& T,
                                   bool quick) {
    Checker ck(quick);
    const int m = rep.dimV;
    for (int u = 0; u < m && !ck.done(); ++u)
        for (int v = 0; v < m && !ck.done(); ++v)
            for (int w = 0; w < m && !ck.done(); ++w) {
                const Vec Tu = column(T, u);
                const Vec Tv = column(T, v);
                const Vec Tw = column(T, w);
                const Vec uu = basis_vec(m, u, T.field());
                const Vec vv = basis_vec(m, v, T.field());
                const Vec ww = basis_vec(m, w, T.field());
                const Vec r =
                    add(rep.l_of(sub(a.op.mul(Tu, Tv), a.op.mul(Tv, Tu))).apply(ww),
                        sub(rep.r_of(a.op.mul(Tu, Tw)).apply(vv), rep.r_of(a.op.mul(Tv, Tw)).apply(uu)));
                ck.require_zero("Ao1", {u, v, w}, r);
            }
    return ck.take();
}

InducedAPN induced_apn_from_anti_o(const NovikovAlgebra& a, const NovikovRep& rep, const Matrix& T) {
    const int m = rep.dimV;
    InducedAPN out;
    out.succ = BinaryOp(m, T.field());
    out.prec = BinaryOp(m, T.field());
    for (int u = 0; u < m; ++u) {
        const Vec Tu = column(T, u);
        const Matrix ls = -rep.l_of(Tu);
        const Matrix rs = -rep.r_of(Tu);
        for (int v = 0; v < m; ++v)
            for (int k = 0; k < m; ++k) {
                out.succ.c.at(u, v, k) = ls.at(k, v);   // u > v = -l(Tu)v
                out.prec.c.at(v, u, k) = rs.at(k, v);   // v < u = -r(Tu)v
            }
    }
    // (Ao3)-(Ao5) hold for every anti-O-operator; (Aa5) decides strength.
    Checker ck(false);
    const BinaryOp dotop = out.succ + out.prec;
    for (int u = 0; u < m && !ck.done(); ++u)
        for (int v = 0; v < m && !ck.done(); ++v)
            for (int w = 0; w < m && !ck.done(); ++w) {
                const Vec uu = basis_vec(m, u, T.field());
                const Vec vv = basis_vec(m, v, T.field());
                const Vec ww = basis_vec(m, w, T.field());
                const Vec uv = dotop.mul_basis(u, v);
                const Vec vu = dotop.mul_basis(v, u);
                // (Ao3) (v.u - u.v) > w = u > (v > w) - v > (u > w)
                Vec r = sub(out.succ.mul(sub(vu, uv), ww),
                            sub(out.succ.mul(uu, out.succ.mul(vv, ww)),
                                out.succ.mul(vv, out.succ.mul(uu, ww))));
                if (!ck.require_zero("Ao3", {u, v, w}, r)) break;
                // (Ao4) (u > w) < v - u > (w < v) = w < (u.v) + (w < u) < v
                r = sub(sub(out.prec.mul(out.succ.mul(uu, ww), vv),
                            out.succ.mul(uu, out.prec.mul(ww, vv))),
                        add(out.prec.mul(ww, uv), out.prec.mul(out.prec.mul(ww, uu), vv)));
                if (!ck.require_zero("Ao4", {u, v, w}, r)) break;
                // (Ao5) (u.v) > w = -(u > w) < v
                r = add(out.succ.mul(uv, ww), out.prec.mul(out.succ.mul(uu, ww), vv));
                if (!ck.require_zero("Ao5a", {u, v, w}, r)) break;
                // (Ao5) (w < v) < u = (w < u) < v
                r = sub(out.prec.mul(out.prec.mul(ww, vv), uu),
                        out.prec.mul(out.prec.mul(ww, uu), vv));
                if (!ck.require_zero("Ao5b", {u, v, w}, r)) break;
            }
    out.partial = ck.take();
    out.strong = check_strong_anti_o(a, rep, T, true).passed;
    return out;
}

APNAlgebra compatible_apn_from_invertible_anti_o(const NovikovAlgebra& a, const NovikovRep& rep,
                                                 const Matrix& T) {
    if (T.rows() != T.cols()) throw std::invalid_argument("invertible anti-O-operator must be square");
    auto Tinv = invert(T);
    if (!Tinv) throw std::invalid_argument("anti-O-operator is singular");
    if (!check_anti_o_operator(a, rep, T, true).passed)
        throw std::invalid_argument("not an anti-O-operator");
    const int n = a.dim();
    APNAlgebra out{a.field, BinaryOp(n, a.field), BinaryOp(n, a.field)};
    for (int i = 0; i < n; ++i) {
        const Vec x = basis_vec(n, i, a.field);
        for (int j = 0; j < n; ++j) {
            const Vec y = basis_vec(n, j, a.field);
            const Vec sv = scale(-Scalar::one(a.field), T.apply(rep.l_of(x).apply(Tinv->apply(y))));
            const Vec pv = scale(-Scalar::one(a.field), T.apply(rep.r_of(y).apply(Tinv->apply(x))));
            for (int k = 0; k < n; ++k) {
                out.succ.c.at(i, j, k) = sv[static_cast<size_t>(k)];
                out.prec.c.at(i, j, k) = pv[static_cast<size_t>(k)];
            }
        }
    }
    return out;
}

IdentityReport check_o_operator_novikov(const NovikovAlgebra& a, const NovikovRep& rep,
                                        const Matrix& T, bool quick) {
    if (T.rows() != a.dim() || T.cols() != rep.dimV)
        throw std::invalid_argument("T must map V into A");
    Checker ck(quick);
    const int m = rep.dimV;
    for (int u = 0; u < m && !ck.done(); ++u)
        for (int v = 0; v < m && !ck.done(); ++v) {
            const Vec Tu = column(T, u);
            const Vec Tv = column(T, v);
            const Vec uu = basis_vec(m, u, T.field());
            const Vec vv = basis_vec(m, v, T.field());
            const Vec inner = add(rep.l_of(Tu).apply(vv), rep.r_of(Tv).apply(uu));
            ck.require_zero("OopN", {u, v}, sub(a.op.mul(Tu, Tv), T.apply(inner)));
        }
    return ck.take();
}

IdentityReport check_o_operator_apn(const APNAlgebra& a, const APNRep& rep, const Matrix& T,
                                    bool quick) {
    if (T.rows() != a.dim() || T.cols() != rep.dimV)
        throw std::invalid_argument("T must map V into A");
    Checker ck(quick);
    const int m = rep.dimV;
    for (int u = 0; u < m && !ck.done(); ++u)
        for (int v = 0; v < m && !ck.done(); ++v) {
            const Vec Tu = column(T, u);
            const Vec Tv = column(T, v);
            const Vec uu = basis_vec(m, u, T.field());
            const Vec vv = basis_vec(m, v, T.field());
            Vec r = sub(a.succ.mul(Tu, Tv),
                        T.apply(add(rep.l_succ_of(Tu).apply(vv), rep.r_succ_of(Tv).apply(uu))));
            if (!ck.require_zero("Oop>", {u, v}, r)) break;
            r = sub(a.prec.mul(Tu, Tv),
                    T.apply(add(rep.l_prec_of(Tu).apply(vv), rep.r_prec_of(Tv).apply(uu))));
            if (!ck.require_zero("Oop<", {u, v}, r)) break;
        }
    return ck.take();
}

IdentityReport check_rota_baxter_apn(const APNAlgebra& a, const Matrix& P, const Scalar& lambda,
                                     bool quick) {
    if (!P.is_square() || P.rows() != a.dim())
        throw std::invalid_argument("Rota-Baxter operator must be square of dim A");
    Checker ck(quick);
    const int n = a.dim();
    auto law = [&](const BinaryOp& op, const char* id, int i, int j) {
        const Vec x = basis_vec(n, i, a.field);
        const Vec y = basis_vec(n, j, a.field);
        const Vec Px = P.apply(x);
        const Vec Py = P.apply(y);
        const Vec inner = add(add(op.mul(Px, y), op.mul(x, Py)), scale(lambda, op.mul(x, y)));
        return sub(op.mul(Px, Py), P.apply(inner));
    };
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j) {
            if (!ck.require_zero("RB>", {i, j}, law(a.succ, "RB>", i, j))) break;
            if (!ck.require_zero("RB<", {i, j}, law(a.prec, "RB<", i, j))) break;
        }
    return ck.take();
}

IdentityReport check_anti_rota_baxter(const NovikovAlgebra& a, const Matrix& T, bool quick) {
    Checker ck(quick);
    const int n = a.dim();
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j) {
            const Vec x = basis_vec(n, i, a.field);
            const Vec y = basis_vec(n, j, a.field);
            const Vec Tx = T.apply(x);
            const Vec Ty = T.apply(y);
            const Vec r = add(a.op.mul(Tx, Ty), T.apply(add(a.op.mul(Tx, y), a.op.mul(x, Ty))));
            ck.require_zero("ARB", {i, j}, r);
        }
    return ck.take();
}

IdentityReport check_strong_anti_rota_baxter(const NovikovAlgebra& a, const Matrix& T, bool quick) {
    Checker ck(quick);
    const int n = a.dim();
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j)
            for (int k = 0; k < n && !ck.done(); ++k) {
                const Vec x = basis_vec(n, i, a.field);
                const Vec y = basis_vec(n, j, a.field);
                const Vec z = basis_vec(n, k, a.field);
                const Vec Tx = T.apply(x);
                const Vec Ty = T.apply(y);
                const Vec Tz = T.apply(z);
                const Vec bracket = sub(a.op.mul(Tx, Ty), a.op.mul(Ty, Tx));
                const Vec r = add(a.op.mul(bracket, z),
                                  sub(a.op.mul(y, a.op.mul(Tx, Tz)), a.op.mul(x, a.op.mul(Ty, Tz))));
                ck.require_zero("ARBs", {i, j, k}, r);
            }
    return ck.take();
}

APNAlgebra a_apn_sum(const AAPNStructure& s) {
    APNAlgebra sum = semidirect_apn_unchecked(s.host, s.rep);
    const int n = s.host.dim();
    const int m = s.rep.dimV;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                sum.succ.c.at(n + i, n + j, n + k) = s.v_succ.c.at(i, j, k);
                sum.prec.c.at(n + i, n + j, n + k) = s.v_prec.c.at(i, j, k);
            }
    return sum;
}

IdentityReport check_a_apn_algebra(const AAPNStructure& s, bool quick) {
    IdentityReport out = check_apn(s.v_succ, s.v_prec, quick);
    out.merge(check_apn_rep(s.host, s.rep, quick));
    const int n = s.host.dim();
    const int m = s.rep.dimV;
    const FieldSpec f = s.host.field;
    Checker ck(quick);
    if (!(quick && !out.passed)) {
        const BinaryOp vc = s.v_succ + s.v_prec;
        auto ls = [&](const Vec& x, const Vec& v) { return s.rep.l_succ_of(x).apply(v); };
        auto rs = [&](const Vec& x, const Vec& v) { return s.rep.r_succ_of(x).apply(v); };
        auto lp = [&](const Vec& x, const Vec& v) { return s.rep.l_prec_of(x).apply(v); };
        auto rp = [&](const Vec& x, const Vec& v) { return s.rep.r_prec_of(x).apply(v); };
        auto lo = [&](const Vec& x, const Vec& v) { return add(ls(x, v), lp(x, v)); };
        auto ro = [&](const Vec& x, const Vec& v) { return add(rs(x, v), rp(x, v)); };
        auto VS = [&](const Vec& u, const Vec& v) { return s.v_succ.mul(u, v); };
        auto VP = [&](const Vec& u, const Vec& v) { return s.v_prec.mul(u, v); };
        auto VC = [&](const Vec& u, const Vec& v) { return vc.mul(u, v); };
        for (int i = 0; i < n && !ck.done(); ++i)
            for (int j = 0; j < m && !ck.done(); ++j)
                for (int k = 0; k < m && !ck.done(); ++k) {
                    const Vec x = basis_vec(n, i, f);
                    const Vec a = basis_vec(m, j, f);
                    const Vec b = basis_vec(m, k, f);
                    // 1: (lo(x)a - ro(x)a) >V b = a >V ls(x)b - ls(x)(a >V b)
                    Vec r = sub(VS(sub(lo(x, a), ro(x, a)), b),
                                sub(VS(a, ls(x, b)), ls(x, VS(a, b))));
                    if (!ck.require_zero("RRa.1", {i, j, k}, r)) break;
                    // 2: lp(x)(a oV b) = rs(x)a <V b - lp(x)a <V b - a >V lp(x)b
                    r = sub(lp(x, VC(a, b)),
                            sub(sub(VP(rs(x, a), b), VP(lp(x, a), b)), VS(a, lp(x, b))));
                    if (!ck.require_zero("RRa.2", {i, j, k}, r)) break;
                    // 3a: lo(x)a >V b = -ls(x)b <V a
                    r = add(VS(lo(x, a), b), VP(ls(x, b), a));
                    if (!ck.require_zero("RRa.3a", {i, j, k}, r)) break;
                    // 3b: lp(x)a <V b = lp(x)b <V a
                    r = sub(VP(lp(x, a), b), VP(lp(x, b), a));
                    if (!ck.require_zero("RRa.3b", {i, j, k}, r)) break;
                    // 4: (lo(x)a - ro(x)a) <V b = ls(x)(a oV b) - a >V lo(x)b
                    r = sub(VP(sub(lo(x, a), ro(x, a)), b), sub(ls(x, VC(a, b)), VS(a, lo(x, b))));
                    if (!ck.require_zero("RRa.4", {i, j, k}, r)) break;
                    // 5: rs(x)(a oV b - b oV a) = b >V rs(x)a - a >V rs(x)b
                    r = sub(rs(x, sub(VC(a, b), VC(b, a))), sub(VS(b, rs(x, a)), VS(a, rs(x, b))));
                    if (!ck.require_zero("RRa.5", {i, j, k}, r)) break;
                    // 6: a <V ro(x)b = rp(x)(b >V a - a <V b) - b >V rp(x)a
                    r = sub(VP(a, ro(x, b)),
                            sub(rp(x, sub(VS(b, a), VP(a, b))), VS(b, rp(x, a))));
                    if (!ck.require_zero("RRa.6", {i, j, k}, r)) break;
                    // 7: rp(x)(a oV b - b oV a) = a >V ro(x)b - b >V ro(x)a
                    r = sub(rp(x, sub(VC(a, b), VC(b, a))), sub(VS(a, ro(x, b)), VS(b, ro(x, a))));
                    if (!ck.require_zero("RRa.7", {i, j, k}, r)) break;
                    // 8: a <V lo(x)b = ls(x)a <V b - rp(x)a <V b - ls(x)(a <V b)
                    r = sub(VP(a, lo(x, b)),
                            sub(sub(VP(ls(x, a), b), VP(rp(x, a), b)), ls(x, VP(a, b))));
                    if (!ck.require_zero("RRa.8", {i, j, k}, r)) break;
                    // 9a: rs(x)(a oV b) = -rs(x)a <V b
                    r = add(rs(x, VC(a, b)), VP(rs(x, a), b));
                    if (!ck.require_zero("RRa.9a", {i, j, k}, r)) break;
                    // 9b: rp(x)(a <V b) = rp(x)a <V b
                    r = sub(rp(x, VP(a, b)), VP(rp(x, a), b));
                    if (!ck.require_zero("RRa.9b", {i, j, k}, r)) break;
                    // 10: rp(x)(a >V b) = -ro(x)a >V b
                    r = add(rp(x, VS(a, b)), VS(ro(x, a), b));
                    if (!ck.require_zero("RRa.10", {i, j, k}, r)) break;
                }
    }
    out.merge(ck.take());
    // Equivalent route: the glued algebra on A (+) V must satisfy the axioms
    // exactly when the direct list does.
    const APNAlgebra sum = a_apn_sum(s);
    const bool sum_ok = is_apn(sum.succ, sum.prec);
    if (sum_ok != out.passed)
        throw std::logic_error("A-anti-pre-Novikov check disagrees with the glued-sum route");
    return out;
}

IdentityReport check_relative_rb(const AAPNStructure& s, const Matrix& T, const Scalar& lambda,
                                 bool quick) {
    if (T.rows() != s.host.dim() || T.cols() != s.rep.dimV)
        throw std::invalid_argument("T must map V into A");
    Checker ck(quick);
    const int m = s.rep.dimV;
    for (int u = 0; u < m && !ck.done(); ++u)
        for (int v = 0; v < m && !ck.done(); ++v) {
            const Vec Tu = column(T, u);
            const Vec Tv = column(T, v);
            const Vec uu = basis_vec(m, u, T.field());
            const Vec vv = basis_vec(m, v, T.field());
            Vec inner = add(add(s.rep.l_succ_of(Tu).apply(vv), s.rep.r_succ_of(Tv).apply(uu)),
                            scale(lambda, s.v_succ.mul(uu, vv)));
            Vec r = sub(s.host.succ.mul(Tu, Tv), T.apply(inner));
            if (!ck.require_zero("RRB>", {u, v}, r)) break;
            inner = add(add(s.rep.l_prec_of(Tu).apply(vv), s.rep.r_prec_of(Tv).apply(uu)),
                        scale(lambda, s.v_prec.mul(uu, vv)));
            r = sub(s.host.prec.mul(Tu, Tv), T.apply(inner));
            if (!ck.require_zero("RRB<", {u, v}, r)) break;
        }
    return ck.take();
}

AAPNStructure aapn_from_symmetric_invariant(const APNAlgebra& a, const Matrix& w) {
    const int n = a.dim();
    if (!w.is_square() || w.rows() != n)
        throw std::invalid_argument("tensor must be square of dim A");
    AAPNStructure s;
    s.host = a;
    s.rep = dual_apn_rep(a, regular_rep(a));
    s.v_succ = BinaryOp(n, a.field);
    s.v_prec = BinaryOp(n, a.field);
    const BinaryOp circ = a.circ();
    const Matrix Tw = w.transpose();  // T_w(zeta) = w^T zeta
    for (int i = 0; i < n; ++i) {
        const Vec wz = Tw.apply(basis_vec(n, i, a.field));
        // zeta >= eta = -L_star*(T_w zeta) eta,  zeta <= eta = R_odot*(T_w zeta) eta
        const Matrix lstar = circ.left_of(wz) + circ.right_of(wz);
        const Matrix rodot = a.succ.right_of(wz) + a.prec.left_of(wz);
        const Matrix sv = -star_action(lstar);
        const Matrix pv = star_action(rodot);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                s.v_succ.c.at(i, j, k) = sv.at(k, j);
                s.v_prec.c.at(i, j, k) = pv.at(k, j);
            }
    }
    return s;
}

}  // namespace apn
