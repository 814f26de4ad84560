#pragma once

#include "apn/representation.hpp"

namespace apn {

// (A, B, l_A, r_A, l_B, r_B): act_a is (B, l_A, r_A), a representation of A on
// B's space (families indexed by the basis of A); act_b acts the other way.
struct NovikovMatchedPair {
    NovikovAlgebra a, b;
    NovikovRep act_a;  // A acting on B
    NovikovRep act_b;  // B acting on A
};

// Two anti-pre-Novikov algebras acting on each other by APN representations.
struct APNMatchedPair {
    APNAlgebra a1, a2;
    APNRep act1;  // A1 acting on A2
    APNRep act2;  // A2 acting on A1
};

// Both representation checks plus compatibility equations (Nm1)-(Nm8).
IdentityReport check_novikov_matched_pair(const NovikovMatchedPair& mp, bool quick = false);

// Compatibility (Nm-k) alone, k in 1..8, over all basis tuples.
bool matched_pair_eq_holds(const NovikovMatchedPair& mp, int k);

// Both APN representation checks plus the full compatibility list of the
// matched-pair proposition; the mirrored half is the same twelve equations
// with the roles of the two algebras exchanged.
IdentityReport check_apn_matched_pair(const APNMatchedPair& mp, bool quick = false);

// (x+a)(y+b) = (xoy + l_B(a)y + r_B(b)x) + (a.b + l_A(x)b + r_A(y)a), basis
// ordered A first then B. The checked variant throws on an invalid pair.
NovikovAlgebra build_novikov_sum(const NovikovMatchedPair& mp);
NovikovAlgebra build_novikov_sum_unchecked(const NovikovMatchedPair& mp);

APNAlgebra build_apn_sum(const APNMatchedPair& mp);
APNAlgebra build_apn_sum_unchecked(const APNMatchedPair& mp);

// Sums the succ/prec actions into a matched pair of the associated Novikov
// algebras.
NovikovMatchedPair apn_mp_to_novikov_mp(const APNMatchedPair& mp);

}  // namespace apn
