#include "apn/representation.hpp"

#include <stdexcept>

namespace apn {

namespace {

Matrix family_of(const std::vector<Matrix>& fam, const Vec& x) {
    if (fam.empty()) throw std::invalid_argument("empty matrix family");
    Matrix m(fam[0].rows(), fam[0].cols(), fam[0].field());
    for (size_t i = 0; i < fam.size(); ++i) {
        if (x[i].is_zero()) continue;
        m = m + fam[i].scaled(x[i]);
    }
    return m;
}

std::vector<Matrix> family_sum(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    std::vector<Matrix> r;
    r.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

}  // namespace

Matrix NovikovRep::l_of(const Vec& x) const { return family_of(l, x); }
Matrix NovikovRep::r_of(const Vec& x) const { return family_of(r, x); }
Matrix APNRep::l_succ_of(const Vec& x) const { return family_of(l_succ, x); }
Matrix APNRep::r_succ_of(const Vec& x) const { return family_of(r_succ, x); }
Matrix APNRep::l_prec_of(const Vec& x) const { return family_of(l_prec, x); }
Matrix APNRep::r_prec_of(const Vec& x) const { return family_of(r_prec, x); }

Matrix star_action(const Matrix& m) { return -(m.transpose()); }

IdentityReport check_novikov_rep(const NovikovAlgebra& a, const NovikovRep& rep, bool quick) {
    const int n = a.dim();
    if (static_cast<int>(rep.l.size()) != n || static_cast<int>(rep.r.size()) != n)
        throw std::invalid_argument("representation family length differs from dim A");
    Checker ck(quick);
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j) {
            const Vec xy = a.op.mul_basis(i, j);
            const Vec yx = a.op.mul_basis(j, i);
            const Matrix& lx = rep.l[static_cast<size_t>(i)];
            const Matrix& ly = rep.l[static_cast<size_t>(j)];
            const Matrix& rx = rep.r[static_cast<size_t>(i)];
            const Matrix& ry = rep.r[static_cast<size_t>(j)];
            // (Nr1) l(xoy - yox) = l(x)l(y) - l(y)l(x)
            Matrix res = rep.l_of(sub(xy, yx)) - (lx * ly - ly * lx);
            if (!ck.require_zero("Nr1", {i, j}, res)) break;
            // (Nr2) l(x)r(y) - r(y)l(x) = r(xoy) - r(y)r(x)
            res = (lx * ry - ry * lx) - (rep.r_of(xy) - ry * rx);
            if (!ck.require_zero("Nr2", {i, j}, res)) break;
            // (Nr3) l(xoy) = r(y)l(x)
            res = rep.l_of(xy) - ry * lx;
            if (!ck.require_zero("Nr3a", {i, j}, res)) break;
            // (Nr3) r(x)r(y) = r(y)r(x)
            res = rx * ry - ry * rx;
            if (!ck.require_zero("Nr3b", {i, j}, res)) break;
        }
    return ck.take();
}

IdentityReport check_apn_rep(const APNAlgebra& a, const APNRep& rep, bool quick) {
    const int n = a.dim();
    if (static_cast<int>(rep.l_succ.size()) != n || static_cast<int>(rep.r_succ.size()) != n ||
        static_cast<int>(rep.l_prec.size()) != n || static_cast<int>(rep.r_prec.size()) != n)
        throw std::invalid_argument("representation family length differs from dim A");
    Checker ck(quick);
    const BinaryOp circ = a.circ();
    const std::vector<Matrix> l_circ = family_sum(rep.l_succ, rep.l_prec);
    const std::vector<Matrix> r_circ = family_sum(rep.r_succ, rep.r_prec);
    auto of = [](const std::vector<Matrix>& fam, const Vec& x) { return family_of(fam, x); };
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j) {
            const Vec x = basis_vec(n, i, a.field);
            const Vec y = basis_vec(n, j, a.field);
            const Vec xy = circ.mul_basis(i, j);
            const Vec yx = circ.mul_basis(j, i);
            const Matrix& lsx = rep.l_succ[static_cast<size_t>(i)];
            const Matrix& lsy = rep.l_succ[static_cast<size_t>(j)];
            const Matrix& rsx = rep.r_succ[static_cast<size_t>(i)];
            const Matrix& rsy = rep.r_succ[static_cast<size_t>(j)];
            const Matrix& lpx = rep.l_prec[static_cast<size_t>(i)];
            const Matrix& lpy = rep.l_prec[static_cast<size_t>(j)];
            const Matrix& rpx = rep.r_prec[static_cast<size_t>(i)];
            const Matrix& rpy = rep.r_prec[static_cast<size_t>(j)];
            const Matrix lcx = of(l_circ, x), lcy = of(l_circ, y);
            const Matrix rcx = of(r_circ, x), rcy = of(r_circ, y);

            // (rp1) l>(xoy - yox) = l>(y)l>(x) - l>(x)l>(y)
            Matrix res = of(rep.l_succ, sub(xy, yx)) - (lsy * lsx - lsx * lsy);
            if (!ck.require_zero("rp1", {i, j}, res)) break;
            // (rp2) r<(xoy) = r<(y)l>(x) - r<(y)r<(x) - l>(x)r<(y)
            res = of(rep.r_prec, xy) - (rpy * lsx - rpy * rpx - lsx * rpy);
            if (!ck.require_zero("rp2", {i, j}, res)) break;
            // (rp3) l>(xoy) = -r<(y)l>(x)
            res = of(rep.l_succ, xy) + rpy * lsx;
            if (!ck.require_zero("rp3a", {i, j}, res)) break;
            // (rp3) l<(x<y) = r<(y)l<(x)
            res = of(rep.l_prec, a.prec.mul_basis(i, j)) - rpy * lpx;
            if (!ck.require_zero("rp3b", {i, j}, res)) break;
            // (rp4) l<(xoy - yox) = l>(x)lo(y) - l>(y)lo(x)
            res = of(rep.l_prec, sub(xy, yx)) - (lsx * lcy - lsy * lcx);
            if (!ck.require_zero("rp4", {i, j}, res)) break;
            // (rp5) r>(x)(lo(y) - ro(y)) = r>(y>x) - l>(y)r>(x)
            res = rsx * (lcy - rcy) - (of(rep.r_succ, a.succ.mul_basis(j, i)) - lsy * rsx);
            if (!ck.require_zero("rp5", {i, j}, res)) break;
            // (rp6) l<(x)lo(y) = l<(y>x) - l<(x<y) - l>(y)l<(x)
            res = lpx * lcy -
                  (of(rep.l_prec, a.succ.mul_basis(j, i)) - of(rep.l_prec, a.prec.mul_basis(i, j)) -
                   lsy * lpx);
            if (!ck.require_zero("rp6", {i, j}, res)) break;
            // (rp7) r<(x)(lo(y) - ro(y)) = l>(y)ro(x) - r>(yox)
            res = rpx * (lcy - rcy) - (lsy * rcx - of(rep.r_succ, yx));
            if (!ck.require_zero("rp7", {i, j}, res)) break;
            // (rp8) r>(x)lo(y) = -l<(y>x)
            res = rsx * lcy + of(rep.l_prec, a.succ.mul_basis(j, i));
            if (!ck.require_zero("rp8a", {i, j}, res)) break;
            // (rp8) r<(x)r<(y) = r<(y)r<(x)
            res = rpx * rpy - rpy * rpx;
            if (!ck.require_zero("rp8b", {i, j}, res)) break;
            // (rp9) l<(x)ro(y) = r<(y)r>(x) - r<(y)l<(x) - r>(x<y)
            res = lpx * rcy - (rpy * rsx - rpy * lpx - of(rep.r_succ, a.prec.mul_basis(i, j)));
            if (!ck.require_zero("rp9", {i, j}, res)) break;
            // (rp10) r>(x)ro(y) = -r<(y)r>(x)
            res = rsx * rcy + rpy * rsx;
            if (!ck.require_zero("rp10", {i, j}, res)) break;
        }
    return ck.take();
}

NovikovRep regular_novikov_rep(const NovikovAlgebra& a) {
    NovikovRep rep;
    rep.dimV = a.dim();
    for (int i = 0; i < a.dim(); ++i) {
        rep.l.push_back(a.op.left(i));
        rep.r.push_back(a.op.right(i));
    }
    return rep;
}

APNRep regular_rep(const APNAlgebra& a) {
    APNRep rep;
    rep.dimV = a.dim();
    for (int i = 0; i < a.dim(); ++i) {
        rep.l_succ.push_back(a.succ.left(i));
        rep.r_succ.push_back(a.succ.right(i));
        rep.l_prec.push_back(a.prec.left(i));
        rep.r_prec.push_back(a.prec.right(i));
    }
    return rep;
}

APNRep dual_apn_rep(const APNAlgebra& a, const APNRep& rep) {
    if (!check_apn_rep(a, rep, true).passed)
        throw std::invalid_argument("dual_apn_rep: input is not a representation");
    APNRep d;
    d.dimV = rep.dimV;
    for (int i = 0; i < a.dim(); ++i) {
        const Matrix lo = rep.l_succ[static_cast<size_t>(i)] + rep.l_prec[static_cast<size_t>(i)];
        const Matrix ro = rep.r_succ[static_cast<size_t>(i)] + rep.r_prec[static_cast<size_t>(i)];
        const Matrix lstar = lo + ro;
        const Matrix rodot = rep.r_succ[static_cast<size_t>(i)] + rep.l_prec[static_cast<size_t>(i)];
        d.l_succ.push_back(-star_action(lstar));                                 // -l_star*
        d.r_succ.push_back(-star_action(rep.r_succ[static_cast<size_t>(i)]));    // -r_succ*
        d.l_prec.push_back(star_action(rodot));                                  // r_odot*
        d.r_prec.push_back(star_action(ro));                                     // r_circ*
    }
    return d;
}

std::vector<NovikovRep> novikov_reps_from_apn_rep(const APNAlgebra& a, const APNRep& rep) {
    if (!check_apn_rep(a, rep, true).passed)
        throw std::invalid_argument("novikov_reps_from_apn_rep: input is not a representation");
    std::vector<NovikovRep> out(4);
    for (auto& r : out) r.dimV = rep.dimV;
    for (int i = 0; i < a.dim(); ++i) {
        const Matrix lo = rep.l_succ[static_cast<size_t>(i)] + rep.l_prec[static_cast<size_t>(i)];
        const Matrix ro = rep.r_succ[static_cast<size_t>(i)] + rep.r_prec[static_cast<size_t>(i)];
        const Matrix lstar = lo + ro;
        const Matrix lodot = rep.l_succ[static_cast<size_t>(i)] + rep.r_prec[static_cast<size_t>(i)];
        out[0].l.push_back(-rep.l_succ[static_cast<size_t>(i)]);
        out[0].r.push_back(-rep.r_prec[static_cast<size_t>(i)]);
        out[1].l.push_back(lo);
        out[1].r.push_back(ro);
        out[2].l.push_back(star_action(lstar));    // l_star*
        out[2].r.push_back(-star_action(ro));      // -r_circ*
        out[3].l.push_back(-star_action(lodot));   // -l_odot*
        out[3].r.push_back(star_action(rep.r_prec[static_cast<size_t>(i)]));  // r_prec*
    }
    return out;
}

APNAlgebra semidirect_apn_unchecked(const APNAlgebra& a, const APNRep& rep) {
    const int n = a.dim();
    const int m = rep.dimV;
    const int N = n + m;
    APNAlgebra s{a.field, BinaryOp(N, a.field), BinaryOp(N, a.field)};
    auto fill = [&](BinaryOp& dst, const BinaryOp& base, const std::vector<Matrix>& l,
                    const std::vector<Matrix>& r) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) dst.c.at(i, j, k) = base.c.at(i, j, k);
        // x * v = l(x) v, v * x = r(x) v
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    dst.c.at(i, n + j, n + k) = l[static_cast<size_t>(i)].at(k, j);
                    dst.c.at(n + j, i, n + k) = r[static_cast<size_t>(i)].at(k, j);
                }
    };
    fill(s.succ, a.succ, rep.l_succ, rep.r_succ);
    fill(s.prec, a.prec, rep.l_prec, rep.r_prec);
    return s;
}

APNAlgebra semidirect_apn(const APNAlgebra& a, const APNRep& rep) {
    if (!check_apn_rep(a, rep, true).passed)
        throw std::invalid_argument("semidirect_apn: not a representation (sum would fail the axioms)");
    return semidirect_apn_unchecked(a, rep);
}

}  // namespace apn
