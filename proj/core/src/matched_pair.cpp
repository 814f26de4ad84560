#include "apn/matched_pair.hpp"

#include <stdexcept>

namespace apn {

namespace {

Vec apply_family(const std::vector<Matrix>& fam, const Vec& coeffs, const Vec& v) {
    Vec r = zero_vec(static_cast<int>(v.size()), v.empty() ? FieldSpec{} : v[0].field());
    for (size_t i = 0; i < fam.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        r = add(r, scale(coeffs[i], fam[i].apply(v)));
    }
    return r;
}

}  // namespace

namespace {

// Residual of (Nm-k). For k in {1,2,5,6} the indices are (x=e_i, y=e_j, a=f_l)
// and the value lives in A; for k in {3,4,7,8} they are (x=e_i, a=f_j, b=f_l)
// with the value in B.
Vec nm_residual(const NovikovMatchedPair& mp, int k, int i, int j, int l) {
    const int nA = mp.a.dim();
    const int nB = mp.b.dim();
    const FieldSpec f = mp.a.field;
    auto lA = [&](const Vec& x, const Vec& v) { return apply_family(mp.act_a.l, x, v); };
    auto rA = [&](const Vec& x, const Vec& v) { return apply_family(mp.act_a.r, x, v); };
    auto lB = [&](const Vec& aa, const Vec& v) { return apply_family(mp.act_b.l, aa, v); };
    auto rB = [&](const Vec& aa, const Vec& v) { return apply_family(mp.act_b.r, aa, v); };
    auto mulA = [&](const Vec& x, const Vec& y) { return mp.a.op.mul(x, y); };
    auto mulB = [&](const Vec& x, const Vec& y) { return mp.b.op.mul(x, y); };
    const Scalar neg = -Scalar::one(f);

    if (k == 1 || k == 2 || k == 5 || k == 6) {
        const Vec x = basis_vec(nA, i, f), y = basis_vec(nA, j, f);
        const Vec a = basis_vec(nB, l, f);
        const Vec xy = mulA(x, y), yx = mulA(y, x);
        switch (k) {
            case 1:
                return sub(lB(a, xy), add(add(scale(neg, lB(sub(lA(x, a), rA(x, a)), y)),
                                              mulA(sub(lB(a, x), rB(a, x)), y)),
                                          add(rB(rA(y, a), x), mulA(x, lB(a, y)))));
            case 2:
                return sub(rB(a, sub(xy, yx)), add(sub(rB(lA(y, a), x), rB(lA(x, a), y)),
                                                   sub(mulA(x, rB(a, y)), mulA(y, rB(a, x)))));
            case 5:
                return sub(add(mulA(lB(a, x), y), lB(rA(x, a), y)),
                           add(mulA(lB(a, y), x), lB(rA(y, a), x)));
            default:
                return sub(add(mulA(rB(a, x), y), lB(lA(x, a), y)), rB(a, xy));
        }
    }
    const Vec x = basis_vec(nA, i, f);
    const Vec a = basis_vec(nB, j, f), b = basis_vec(nB, l, f);
    const Vec ab = mulB(a, b), ba = mulB(b, a);
    switch (k) {
        case 3:
            return sub(lA(x, ab), add(add(scale(neg, lA(sub(lB(a, x), rB(a, x)), b)),
                                          mulB(sub(lA(x, a), rA(x, a)), b)),
                                      add(rA(rB(b, x), a), mulB(a, lA(x, b)))));
        case 4:
            return sub(rA(x, sub(ab, ba)), add(sub(rA(lB(b, x), a), rA(lB(a, x), b)),
                                               sub(mulB(a, rA(x, b)), mulB(b, rA(x, a)))));
        case 7:
            return sub(add(lA(rB(a, x), b), mulB(lA(x, a), b)),
                       add(lA(rB(b, x), a), mulB(lA(x, b), a)));
        case 8:
            return sub(add(lA(lB(a, x), b), mulB(rA(x, a), b)), rA(x, ab));
        default:
            throw std::invalid_argument("matched-pair equation index must be 1..8");
    }
}

}  // namespace

bool matched_pair_eq_holds(const NovikovMatchedPair& mp, int k) {
    const int nA = mp.a.dim();
    const int nB = mp.b.dim();
    const bool a_valued = (k == 1 || k == 2 || k == 5 || k == 6);
    const int mid = a_valued ? nA : nB;
    for (int i = 0; i < nA; ++i)
        for (int j = 0; j < mid; ++j)
            for (int l = 0; l < nB; ++l)
                if (!is_zero(nm_residual(mp, k, i, j, l))) return false;
    return true;
}

IdentityReport check_novikov_matched_pair(const NovikovMatchedPair& mp, bool quick) {
    Checker ck(quick);
    IdentityReport out = check_novikov_rep(mp.a, mp.act_a, quick);
    out.merge(check_novikov_rep(mp.b, mp.act_b, quick));
    if (quick && !out.passed) return out;

    const int nA = mp.a.dim();
    const int nB = mp.b.dim();
    for (int k : {1, 2, 5, 6})
        for (int i = 0; i < nA && !ck.done(); ++i)
            for (int j = 0; j < nA && !ck.done(); ++j)
                for (int l = 0; l < nB && !ck.done(); ++l)
                    ck.require_zero("Nm" + std::to_string(k), {i, j, l},
                                    nm_residual(mp, k, i, j, l));
    for (int k : {3, 4, 7, 8})
        for (int i = 0; i < nA && !ck.done(); ++i)
            for (int j = 0; j < nB && !ck.done(); ++j)
                for (int l = 0; l < nB && !ck.done(); ++l)
                    ck.require_zero("Nm" + std::to_string(k), {i, j, l},
                                    nm_residual(mp, k, i, j, l));
    out.merge(ck.take());
    return out;
}

namespace {

// The twelve compatibility equations of the matched-pair proposition, valued
// in A1, indexed (x, y in A1; a in A2). The mirrored half is this same list
// with the roles of A1 and A2 exchanged.
void m0_half(const APNAlgebra& A1, const APNAlgebra& A2, const APNRep& act1, const APNRep& act2,
             const std::string& tag, Checker& ck) {
    const int n1 = A1.dim();
    const int n2 = A2.dim();
    const FieldSpec f = A1.field;
    const BinaryOp c1 = A1.circ();

    auto ls1 = [&](const Vec& x, const Vec& v) { return apply_family(act1.l_succ, x, v); };
    auto rs1 = [&](const Vec& x, const Vec& v) { return apply_family(act1.r_succ, x, v); };
    auto lp1 = [&](const Vec& x, const Vec& v) { return apply_family(act1.l_prec, x, v); };
    auto rp1 = [&](const Vec& x, const Vec& v) { return apply_family(act1.r_prec, x, v); };
    auto lo1 = [&](const Vec& x, const Vec& v) { return add(ls1(x, v), lp1(x, v)); };
    auto ro1 = [&](const Vec& x, const Vec& v) { return add(rs1(x, v), rp1(x, v)); };
    auto ls2 = [&](const Vec& aa, const Vec& v) { return apply_family(act2.l_succ, aa, v); };
    auto rs2 = [&](const Vec& aa, const Vec& v) { return apply_family(act2.r_succ, aa, v); };
    auto lp2 = [&](const Vec& aa, const Vec& v) { return apply_family(act2.l_prec, aa, v); };
    auto rp2 = [&](const Vec& aa, const Vec& v) { return apply_family(act2.r_prec, aa, v); };
    auto lo2 = [&](const Vec& aa, const Vec& v) { return add(ls2(aa, v), lp2(aa, v)); };
    auto ro2 = [&](const Vec& aa, const Vec& v) { return add(rs2(aa, v), rp2(aa, v)); };
    auto S = [&](const Vec& x, const Vec& y) { return A1.succ.mul(x, y); };
    auto P = [&](const Vec& x, const Vec& y) { return A1.prec.mul(x, y); };
    auto C = [&](const Vec& x, const Vec& y) { return c1.mul(x, y); };

    for (int i = 0; i < n1 && !ck.done(); ++i)
        for (int j = 0; j < n1 && !ck.done(); ++j)
            for (int k = 0; k < n2 && !ck.done(); ++k) {
                const Vec x = basis_vec(n1, i, f), y = basis_vec(n1, j, f);
                const Vec a = basis_vec(n2, k, f);
                const Vec xy = C(x, y), yx = C(y, x);
                const Vec comm = sub(xy, yx);

                // 1: rs2(a)(xoy - yox) = y>rs2(a)x - x>rs2(a)y + rs2(lp1(x)a)y - rs2(lp1(y)a)x
                Vec r = sub(rs2(a, comm),
                            add(sub(S(y, rs2(a, x)), S(x, rs2(a, y))),
                                sub(rs2(lp1(x, a), y), rs2(lp1(y, a), x))));
                if (!ck.require_zero(tag + ".1", {i, j, k}, r)) break;
                // 2: ((ro2-lo2)(a)x)>y + ls2((lo1-ro1)(x)a)y
                //    = ls2(a)(x>y) - x>ls2(a)y - rs2(rs1(y)a)x
                r = sub(add(S(sub(ro2(a, x), lo2(a, x)), y), ls2(sub(lo1(x, a), ro1(x, a)), y)),
                        sub(ls2(a, S(x, y)), add(S(x, ls2(a, y)), rs2(rs1(y, a), x))));
                if (!ck.require_zero(tag + ".2", {i, j, k}, r)) break;
                // 3: rs2(a)(xoy) = -(rs2(a)x)<y - lp2(ls1(x)a)y
                r = add(rs2(a, xy), add(P(rs2(a, x), y), lp2(ls1(x, a), y)));
                if (!ck.require_zero(tag + ".3", {i, j, k}, r)) break;
                // 4: (ro2(a)x)>y + ls2(ls1(x)a)y = -rp2(a)(x>y)
                r = add(add(S(ro2(a, x), y), ls2(ls1(x, a), y)), rp2(a, S(x, y)));
                if (!ck.require_zero(tag + ".4", {i, j, k}, r)) break;
                // 5: (lo2(a)x)>y + ls2(ro1(x)a)y = -(ls2(a)y)<x - lp2(rs1(y)a)x
                r = add(add(S(lo2(a, x), y), ls2(ro1(x, a), y)),
                        add(P(ls2(a, y), x), lp2(rs1(y, a), x)));
                if (!ck.require_zero(tag + ".5", {i, j, k}, r)) break;
                // 6: rp2(a)(x<y) = (rp2(a)x)<y + lp2(lp1(x)a)y
                r = sub(rp2(a, P(x, y)), add(P(rp2(a, x), y), lp2(lp1(x, a), y)));
                if (!ck.require_zero(tag + ".6", {i, j, k}, r)) break;
                // 7: (lp2(a)x)<y + lp2(rp1(x)a)y = (lp2(a)y)<x + lp2(rp1(y)a)x
                r = sub(add(P(lp2(a, x), y), lp2(rp1(x, a), y)),
                        add(P(lp2(a, y), x), lp2(rp1(y, a), x)));
                if (!ck.require_zero(tag + ".7", {i, j, k}, r)) break;
                // 8: rp2(a)(xoy - yox) = x>ro2(a)y - y>ro2(a)x + rs2(lo1(y)a)x - rs2(lo1(x)a)y
                r = sub(rp2(a, comm),
                        add(sub(S(x, ro2(a, y)), S(y, ro2(a, x))),
                            sub(rs2(lo1(y, a), x), rs2(lo1(x, a), y))));
                if (!ck.require_zero(tag + ".8", {i, j, k}, r)) break;
                // 9: ((ro2-lo2)(a)x)<y - lp2((lo1-ro1)(x)a)y
                //    = x>lo2(a)y + rs2(ro1(y)a)x - ls2(a)(xoy)
                r = sub(sub(P(sub(ro2(a, x), lo2(a, x)), y), lp2(sub(lo1(x, a), ro1(x, a)), y)),
                        sub(add(S(x, lo2(a, y)), rs2(ro1(y, a), x)), ls2(a, xy)));
                if (!ck.require_zero(tag + ".9", {i, j, k}, r)) break;
                // 10: x<ro2(a)y + rp2(lo1(y)a)x
                //     = rp2(a)(y>x - x>y) - y>rp2(a)x - rs2(lp1(x)a)y
                r = sub(add(P(x, ro2(a, y)), rp2(lo1(y, a), x)),
                        sub(rp2(a, sub(S(y, x), S(x, y))),
                            add(S(y, rp2(a, x)), rs2(lp1(x, a), y))));
                if (!ck.require_zero(tag + ".10", {i, j, k}, r)) break;
                // 11: x<lo2(a)y + rp2(ro1(y)a)x
                //     = ((ls2(a)-rp2(a))x)<y + lp2((rs1-lp1)(x)a)y - ls2(a)(x<y)
                r = sub(add(P(x, lo2(a, y)), rp2(ro1(y, a), x)),
                        sub(add(P(sub(ls2(a, x), rp2(a, x)), y), lp2(sub(rs1(x, a), lp1(x, a)), y)),
                            ls2(a, P(x, y))));
                if (!ck.require_zero(tag + ".11", {i, j, k}, r)) break;
                // 12: lp2(a)(xoy) = ((rs2-lp2)(a)x)<y + lp2((ls1-rp1)(x)a)y
                //     - x>(lp2(a)y) - rs2(rp1(y)a)x
                r = sub(lp2(a, xy),
                        sub(add(P(sub(rs2(a, x), lp2(a, x)), y), lp2(sub(ls1(x, a), rp1(x, a)), y)),
                            add(S(x, lp2(a, y)), rs2(rp1(y, a), x))));
                if (!ck.require_zero(tag + ".12", {i, j, k}, r)) break;
            }
}

}  // namespace

IdentityReport check_apn_matched_pair(const APNMatchedPair& mp, bool quick) {
    IdentityReport out = check_apn_rep(mp.a1, mp.act1, quick);
    out.merge(check_apn_rep(mp.a2, mp.act2, quick));
    if (quick && !out.passed) return out;
    Checker ck(quick);
    m0_half(mp.a1, mp.a2, mp.act1, mp.act2, "M0a", ck);
    if (!ck.done()) m0_half(mp.a2, mp.a1, mp.act2, mp.act1, "M0b", ck);
    out.merge(ck.take());
    return out;
}

NovikovAlgebra build_novikov_sum_unchecked(const NovikovMatchedPair& mp) {
    const int nA = mp.a.dim();
    const int nB = mp.b.dim();
    const int N = nA + nB;
    const FieldSpec f = mp.a.field;
    NovikovAlgebra sum{f, BinaryOp(N, f)};
    for (int i = 0; i < nA; ++i)
        for (int j = 0; j < nA; ++j)
            for (int k = 0; k < nA; ++k) sum.op.c.at(i, j, k) = mp.a.op.c.at(i, j, k);
    for (int i = 0; i < nB; ++i)
        for (int j = 0; j < nB; ++j)
            for (int k = 0; k < nB; ++k) sum.op.c.at(nA + i, nA + j, nA + k) = mp.b.op.c.at(i, j, k);
    // x . b = r_B(b)x + l_A(x)b ; a . y = l_B(a)y + r_A(y)a
    for (int i = 0; i < nA; ++i)
        for (int k = 0; k < nB; ++k) {
            for (int m = 0; m < nA; ++m)
                sum.op.c.at(i, nA + k, m) = mp.act_b.r[static_cast<size_t>(k)].at(m, i);
            for (int m = 0; m < nB; ++m)
                sum.op.c.at(i, nA + k, nA + m) = mp.act_a.l[static_cast<size_t>(i)].at(m, k);
            for (int m = 0; m < nA; ++m)
                sum.op.c.at(nA + k, i, m) = mp.act_b.l[static_cast<size_t>(k)].at(m, i);
            for (int m = 0; m < nB; ++m)
                sum.op.c.at(nA + k, i, nA + m) = mp.act_a.r[static_cast<size_t>(i)].at(m, k);
        }
    return sum;
}

NovikovAlgebra build_novikov_sum(const NovikovMatchedPair& mp) {
    if (!check_novikov_matched_pair(mp, true).passed)
        throw std::invalid_argument("build_novikov_sum: not a matched pair");
    return build_novikov_sum_unchecked(mp);
}

namespace {

BinaryOp apn_sum_component(const BinaryOp& op1, const BinaryOp& op2,
                           const std::vector<Matrix>& l1, const std::vector<Matrix>& r1,
                           const std::vector<Matrix>& l2, const std::vector<Matrix>& r2) {
    const int n1 = op1.dim;
    const int n2 = op2.dim;
    const int N = n1 + n2;
    BinaryOp c(N, op1.field());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k) c.c.at(i, j, k) = op1.c.at(i, j, k);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            for (int k = 0; k < n2; ++k) c.c.at(n1 + i, n1 + j, n1 + k) = op2.c.at(i, j, k);
    // x * b = r2(b)x + l1(x)b ; a * y = l2(a)y + r1(y)a
    for (int i = 0; i < n1; ++i)
        for (int k = 0; k < n2; ++k) {
            for (int m = 0; m < n1; ++m) c.c.at(i, n1 + k, m) = r2[static_cast<size_t>(k)].at(m, i);
            for (int m = 0; m < n2; ++m) c.c.at(i, n1 + k, n1 + m) = l1[static_cast<size_t>(i)].at(m, k);
            for (int m = 0; m < n1; ++m) c.c.at(n1 + k, i, m) = l2[static_cast<size_t>(k)].at(m, i);
            for (int m = 0; m < n2; ++m) c.c.at(n1 + k, i, n1 + m) = r1[static_cast<size_t>(i)].at(m, k);
        }
    return c;
}

}  // namespace

APNAlgebra build_apn_sum_unchecked(const APNMatchedPair& mp) {
    APNAlgebra sum{mp.a1.field,
                   apn_sum_component(mp.a1.succ, mp.a2.succ, mp.act1.l_succ, mp.act1.r_succ,
                                     mp.act2.l_succ, mp.act2.r_succ),
                   apn_sum_component(mp.a1.prec, mp.a2.prec, mp.act1.l_prec, mp.act1.r_prec,
                                     mp.act2.l_prec, mp.act2.r_prec)};
    return sum;
}

APNAlgebra build_apn_sum(const APNMatchedPair& mp) {
    if (!check_apn_matched_pair(mp, true).passed)
        throw std::invalid_argument("build_apn_sum: not a matched pair");
    return build_apn_sum_unchecked(mp);
}

NovikovMatchedPair apn_mp_to_novikov_mp(const APNMatchedPair& mp) {
    NovikovMatchedPair out;
    out.a = mp.a1.associated_unchecked();
    out.b = mp.a2.associated_unchecked();
    out.act_a.dimV = mp.act1.dimV;
    out.act_b.dimV = mp.act2.dimV;
    for (size_t i = 0; i < mp.act1.l_succ.size(); ++i) {
        out.act_a.l.push_back(mp.act1.l_succ[i] + mp.act1.l_prec[i]);
        out.act_a.r.push_back(mp.act1.r_succ[i] + mp.act1.r_prec[i]);
    }
    for (size_t i = 0; i < mp.act2.l_succ.size(); ++i) {
        out.act_b.l.push_back(mp.act2.l_succ[i] + mp.act2.l_prec[i]);
        out.act_b.r.push_back(mp.act2.r_succ[i] + mp.act2.r_prec[i]);
    }
    return out;
}

}  // namespace apn
