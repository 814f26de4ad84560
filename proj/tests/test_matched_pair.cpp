#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apn/bialgebra.hpp"
#include "apn/matched_pair.hpp"
#include "fixtures.hpp"

using namespace apn;
using namespace apn::testing;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::gf(3);

NovikovMatchedPair trivial_pair(const NovikovAlgebra& a, int dimB) {
    NovikovMatchedPair mp;
    mp.a = a;
    mp.b = NovikovAlgebra{a.field, BinaryOp::zero(dimB, a.field)};
    mp.act_a.dimV = dimB;
    mp.act_b.dimV = a.dim();
    for (int i = 0; i < a.dim(); ++i) {
        mp.act_a.l.emplace_back(dimB, dimB, a.field);
        mp.act_a.r.emplace_back(dimB, dimB, a.field);
    }
    for (int i = 0; i < dimB; ++i) {
        mp.act_b.l.emplace_back(a.dim(), a.dim(), a.field);
        mp.act_b.r.emplace_back(a.dim(), a.dim(), a.field);
    }
    return mp;
}
}  // namespace

TEST_CASE("trivial Novikov matched pair and its direct-product sum") {
    const NovikovMatchedPair mp = trivial_pair(n2(), 2);
    CHECK(check_novikov_matched_pair(mp).passed);
    const NovikovAlgebra sum = build_novikov_sum(mp);
    CHECK(check_novikov(sum).passed);
    // restriction to the A block is A's product
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) CHECK(sum.op.c.at(i, j, k) == mp.a.op.c.at(i, j, k));
    // B block is abelian and orthogonal to A
    for (int i = 2; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(is_zero(sum.op.mul_basis(i, j)));
}

TEST_CASE("bialgebra-derived Novikov matched pair passes") {
    const WorkedFixture w = worked_fixture(Scalar::one(Q), Scalar::zero(Q), Scalar::one(Q),
                                           Scalar::one(Q));
    const Cobracket d = coboundary_delta(w.ahat, w.s, w.s);
    const NovikovMatchedPair mp = bialgebra_matched_pair(w.ahat, d);
    CHECK(check_novikov_matched_pair(mp).passed);
    CHECK(check_novikov(build_novikov_sum(mp)).passed);
}

TEST_CASE("random nonzero actions on N2 (+) N2 generically fail") {
    Rng rng(331);
    int failures = 0;
    for (int t = 0; t < 10; ++t) {
        NovikovMatchedPair mp = trivial_pair(n2(F3), 2);
        mp.b = n2(F3);
        mp.act_a.l[static_cast<size_t>(rng.below(2))] = rng.matrix(2, 2, F3);
        mp.act_b.r[static_cast<size_t>(rng.below(2))] = rng.matrix(2, 2, F3);
        const IdentityReport rep = check_novikov_matched_pair(mp);
        if (!rep.passed) {
            ++failures;
            CHECK_FALSE(rep.witnesses.empty());
            CHECK_THROWS_AS(build_novikov_sum(mp), std::invalid_argument);
        }
    }
    CHECK(failures >= 7);
}

TEST_CASE("matched-pair validity tracks the sum algebra in both directions") {
    Rng rng(337);
    for (int t = 0; t < 15; ++t) {
        NovikovMatchedPair mp = trivial_pair(n2(F3), 2);
        if (t % 3 != 0) {  // sometimes corrupt an action
            mp.act_a.l[static_cast<size_t>(rng.below(2))].at(rng.below(2), rng.below(2)) =
                Scalar::of(F3, 1 + rng.below(2));
        }
        const bool ok = check_novikov_matched_pair(mp, true).passed;
        const NovikovAlgebra sum = build_novikov_sum_unchecked(mp);
        // Nm1..Nm8 + rep laws hold iff the glued product is Novikov with both
        // factors as subalgebras; on this block layout that is is_novikov.
        CHECK(ok == is_novikov(sum.op));
    }
}

TEST_CASE("APN matched pair: trivial second factor") {
    APNMatchedPair mp;
    mp.a1 = a3();
    mp.a2 = zero_apn(2, Q);
    mp.act1 = zero_rep(3, 2, Q);
    mp.act2 = zero_rep(2, 3, Q);
    CHECK(check_apn_matched_pair(mp).passed);
    const APNAlgebra sum = build_apn_sum(mp);
    CHECK(check_apn(sum).passed);
}

TEST_CASE("semidirect product is the matched-pair special case") {
    APNMatchedPair mp;
    mp.a1 = a3();
    mp.a2 = zero_apn(3, Q);
    mp.act1 = regular_rep(a3());
    mp.act2 = zero_rep(3, 3, Q);
    CHECK(check_apn_matched_pair(mp).passed);
    const APNAlgebra sum = build_apn_sum(mp);
    const APNAlgebra sd = semidirect_apn(a3(), regular_rep(a3()));
    CHECK(sum.succ == sd.succ);
    CHECK(sum.prec == sd.prec);
}

TEST_CASE("double-construction pair of a bialgebra is an APN matched pair") {
    const WorkedFixture w = worked_fixture(Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q),
                                           Scalar::one(Q));
    const Cobracket d = coboundary_delta(w.ahat, w.s, w.s);
    const DualOps dual = dualize_cobracket(d);
    APNMatchedPair mp;
    mp.a1 = w.ahat;
    mp.a2 = APNAlgebra{Q, dual.succ, dual.prec};
    mp.act1 = dual_apn_rep(mp.a1, regular_rep(mp.a1));
    mp.act2 = dual_apn_rep(mp.a2, regular_rep(mp.a2));
    CHECK(check_apn_matched_pair(mp).passed);

    SUBCASE("mutated action fails") {
        mp.act1.l_succ[0].at(0, 0) += Scalar::one(Q);
        CHECK_FALSE(check_apn_matched_pair(mp, true).passed);
        CHECK_THROWS_AS(build_apn_sum(mp), std::invalid_argument);
    }

    SUBCASE("sum algebra, subalgebra embedding, and the commuting square") {
        const APNAlgebra sum = build_apn_sum(mp);
        CHECK(check_apn(sum).passed);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    CHECK(sum.succ.c.at(i, j, k) == mp.a1.succ.c.at(i, j, k));
                    CHECK(sum.succ.c.at(4 + i, 4 + j, 4 + k) == mp.a2.succ.c.at(i, j, k));
                }
        const NovikovMatchedPair nmp = apn_mp_to_novikov_mp(mp);
        CHECK(check_novikov_matched_pair(nmp).passed);
        const NovikovAlgebra via_sum = build_apn_sum(mp).associated_unchecked();
        const NovikovAlgebra via_pair = build_novikov_sum(nmp);
        CHECK(via_sum.op == via_pair.op);
    }
}

TEST_CASE("apn_mp_to_novikov_mp on the trivial pair") {
    APNMatchedPair mp;
    mp.a1 = a3();
    mp.a2 = zero_apn(2, Q);
    mp.act1 = zero_rep(3, 2, Q);
    mp.act2 = zero_rep(2, 3, Q);
    const NovikovMatchedPair nmp = apn_mp_to_novikov_mp(mp);
    CHECK(check_novikov_matched_pair(nmp).passed);
    for (const auto& m : nmp.act_a.l) CHECK(m.is_zero());
}
