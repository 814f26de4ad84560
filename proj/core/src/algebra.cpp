#include "apn/algebra.hpp"

#include <stdexcept>

#include "apn/representation.hpp"

namespace apn {

IdentityReport check_novikov(const BinaryOp& op, bool quick) {
    Checker ck(quick);
    const int n = op.dim;
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j)
            for (int k = 0; k < n && !ck.done(); ++k) {
                const Vec x = basis_vec(n, i, op.field());
                const Vec y = basis_vec(n, j, op.field());
                const Vec z = basis_vec(n, k, op.field());
                const Vec xy = op.mul_basis(i, j);
                const Vec yx = op.mul_basis(j, i);
                const Vec xz = op.mul_basis(i, k);
                // (Na1): (x o y) o z - x o (y o z) = (y o x) o z - y o (x o z)
                Vec r = sub(sub(op.mul(xy, z), op.mul(x, op.mul(y, z))),
                            sub(op.mul(yx, z), op.mul(y, op.mul(x, z))));
                ck.require_zero("Na1", {i, j, k}, r);
                // (Na2): (x o y) o z = (x o z) o y
                r = sub(op.mul(xy, z), op.mul(xz, y));
                ck.require_zero("Na2", {i, j, k}, r);
            }
    return ck.take();
}

bool is_novikov(const BinaryOp& op) { return check_novikov(op, true).passed; }

IdentityReport check_apn(const BinaryOp& succ, const BinaryOp& prec, bool quick) {
    if (succ.dim != prec.dim) throw std::invalid_argument("succ/prec dimension mismatch");
    Checker ck(quick);
    const int n = succ.dim;
    const BinaryOp circ = succ + prec;
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j)
            for (int k = 0; k < n && !ck.done(); ++k) {
                const Vec x = basis_vec(n, i, succ.field());
                const Vec y = basis_vec(n, j, succ.field());
                const Vec z = basis_vec(n, k, succ.field());
                const Vec comm = sub(circ.mul_basis(i, j), circ.mul_basis(j, i));
                // (Aa1): (x o y - y o x) > z = y > (x > z) - x > (y > z)
                Vec r = sub(succ.mul(comm, z),
                            sub(succ.mul(y, succ.mul(x, z)), succ.mul(x, succ.mul(y, z))));
                if (!ck.require_zero("Aa1", {i, j, k}, r)) break;
                // (Aa2): x < (y o z) = (y > x) < z - (x < y) < z - y > (x < z)
                r = sub(prec.mul(x, circ.mul_basis(j, k)),
                        sub(sub(prec.mul(succ.mul(y, x), z), prec.mul(prec.mul(x, y), z)),
                            succ.mul(y, prec.mul(x, z))));
                if (!ck.require_zero("Aa2", {i, j, k}, r)) break;
                // (Aa3): (x o y) > z = -(x > z) < y
                r = add(succ.mul(circ.mul_basis(i, j), z), prec.mul(succ.mul(x, z), y));
                if (!ck.require_zero("Aa3", {i, j, k}, r)) break;
                // (Aa4): (x < y) < z = (x < z) < y
                r = sub(prec.mul(prec.mul(x, y), z), prec.mul(prec.mul(x, z), y));
                if (!ck.require_zero("Aa4", {i, j, k}, r)) break;
                // (Aa5): (x o y - y o x) < z = x > (y o z) - y > (x o z)
                r = sub(prec.mul(comm, z),
                        sub(succ.mul(x, circ.mul_basis(j, k)), succ.mul(y, circ.mul_basis(i, k))));
                if (!ck.require_zero("Aa5", {i, j, k}, r)) break;
            }
    return ck.take();
}

bool is_apn(const BinaryOp& succ, const BinaryOp& prec) {
    return check_apn(succ, prec, true).passed;
}

NovikovAlgebra associated_novikov(const APNAlgebra& a) {
    IdentityReport rep = check_apn(a, true);
    if (!rep.passed)
        throw std::invalid_argument("associated_novikov: input fails the anti-pre-Novikov axioms");
    return NovikovAlgebra{a.field, a.circ()};
}

DerivedOps derived_ops(const APNAlgebra& a) {
    return DerivedOps{a.succ + a.prec.flipped(), a.circ() + a.circ().flipped()};
}

IdentityReport check_derived_identities(const APNAlgebra& a, bool quick) {
    Checker ck(quick);
    const int n = a.dim();
    const BinaryOp circ = a.circ();
    const DerivedOps d = derived_ops(a);
    for (int i = 0; i < n && !ck.done(); ++i)
        for (int j = 0; j < n && !ck.done(); ++j)
            for (int k = 0; k < n && !ck.done(); ++k) {
                const Vec x = basis_vec(n, i, a.field);
                const Vec y = basis_vec(n, j, a.field);
                const Vec z = basis_vec(n, k, a.field);
                // (x > z) < y = (x > y) < z
                Vec r = sub(a.prec.mul(a.succ.mul(x, z), y), a.prec.mul(a.succ.mul(x, y), z));
                if (!ck.require_zero("der1", {i, j, k}, r)) break;
                // (x o y) > z = (x o z) > y
                r = sub(a.succ.mul(circ.mul_basis(i, j), z), a.succ.mul(circ.mul_basis(i, k), y));
                if (!ck.require_zero("der2", {i, j, k}, r)) break;
                // (x o y) < z = (x o z) < y
                r = sub(a.prec.mul(circ.mul_basis(i, j), z), a.prec.mul(circ.mul_basis(i, k), y));
                if (!ck.require_zero("der3", {i, j, k}, r)) break;
                // (Aa7): x (*) y = x (.) y + y (.) x
                if (k == 0) {
                    r = sub(d.star.mul_basis(i, j), add(d.odot.mul_basis(i, j), d.odot.mul_basis(j, i)));
                    if (!ck.require_zero("Aa7a", {i, j}, r)) break;
                }
                // (Aa7): (x o y) (*) z = x (*) (z o y)
                r = sub(d.star.mul(circ.mul_basis(i, j), z), d.star.mul(x, circ.mul_basis(k, j)));
                if (!ck.require_zero("Aa7b", {i, j, k}, r)) break;
                // (Aa8): x (.) (y (*) z) - z (.) (x (*) y) = y (.) (x o z - z o x)
                r = sub(sub(d.odot.mul(x, d.star.mul_basis(j, k)), d.odot.mul(z, d.star.mul_basis(i, j))),
                        d.odot.mul(y, sub(circ.mul_basis(i, k), circ.mul_basis(k, i))));
                if (!ck.require_zero("Aa8a", {i, j, k}, r)) break;
                // (Aa8): x > (y o z) = y (.) (x o z) - (y o x) < z
                r = sub(a.succ.mul(x, circ.mul_basis(j, k)),
                        sub(d.odot.mul(y, circ.mul_basis(i, k)), a.prec.mul(circ.mul_basis(j, i), z)));
                if (!ck.require_zero("Aa8b", {i, j, k}, r)) break;
            }
    return ck.take();
}

IdentityReport check_bimodule_characterization(const APNAlgebra& a, bool quick) {
    NovikovRep rep;
    rep.dimV = a.dim();
    for (int i = 0; i < a.dim(); ++i) {
        rep.l.push_back(-a.succ.left(i));
        rep.r.push_back(-a.prec.right(i));
    }
    return check_novikov_rep(a.associated_unchecked(), rep, quick);
}

}  // namespace apn
