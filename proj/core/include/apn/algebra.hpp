#pragma once

#include "apn/op.hpp"
#include "apn/report.hpp"

namespace apn {

struct NovikovAlgebra {
    FieldSpec field;
    BinaryOp op;  // x o y

    int dim() const { return op.dim; }
};

// Two operations > ("succ") and < ("prec") whose sum is Novikov and whose
// negative multiplication operators form a bimodule of the sum.
struct APNAlgebra {
    FieldSpec field;
    BinaryOp succ;
    BinaryOp prec;

    int dim() const { return succ.dim; }
    BinaryOp circ() const { return succ + prec; }
    NovikovAlgebra associated_unchecked() const { return NovikovAlgebra{field, circ()}; }
};

// Left-symmetry of associators (Na1) and right commutativity (Na2) on all
// basis triples; complete by multilinearity.
IdentityReport check_novikov(const BinaryOp& op, bool quick = false);
inline IdentityReport check_novikov(const NovikovAlgebra& a, bool quick = false) {
    return check_novikov(a.op, quick);
}
bool is_novikov(const BinaryOp& op);

// Axioms (Aa1)-(Aa5) with o := > + <.
IdentityReport check_apn(const BinaryOp& succ, const BinaryOp& prec, bool quick = false);
inline IdentityReport check_apn(const APNAlgebra& a, bool quick = false) {
    return check_apn(a.succ, a.prec, quick);
}
bool is_apn(const BinaryOp& succ, const BinaryOp& prec);

// o = > + <; the result is checked and the check failure propagated.
NovikovAlgebra associated_novikov(const APNAlgebra& a);

// x (.) y = x>y + y<x  and  x (*) y = x o y + y o x.
struct DerivedOps {
    BinaryOp odot;
    BinaryOp star;
};
DerivedOps derived_ops(const APNAlgebra& a);

// Consequence identities: the three equalities that follow from (Na2) with
// (Aa1)/(Aa4), plus (Aa7) and (Aa8).
IdentityReport check_derived_identities(const APNAlgebra& a, bool quick = false);

// (A, -L_succ, -R_prec) is a bimodule of the associated Novikov algebra.
IdentityReport check_bimodule_characterization(const APNAlgebra& a, bool quick = false);

}  // namespace apn
