// Acceptance suite: runs every top-level criterion at exact (zero) tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exits nonzero if any line
// failed.
//
// Criterion 6(i) is expected to fail: it asserts an equivalence between
// coboundary bialgebras and Yang-Baxter solutions in both directions, but the
// converse direction has counterexamples on algebras whose multiplication
// operators annihilate the residual's support (see the pinned instance in
// test_bialgebra.cpp, confirmed by three independent routes). The line is kept
// faithful to the claim and reports the counterexamples instead of hiding
// them.

#include <iostream>
#include <sstream>
#include <vector>

#include "apn/io.hpp"
#include "apn/operators.hpp"
#include "apn/search.hpp"
#include "fixtures.hpp"

using namespace apn;
using namespace apn::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::gf(2);
const FieldSpec F3 = FieldSpec::gf(3);
const FieldSpec F5 = FieldSpec::gf(5);

int g_failures = 0;

void line(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string fixture_path(const std::string& name) {
    return std::string(APN_FIXTURE_DIR) + "/" + name;
}

// ---- criterion 1: one-dimensional classification --------------------------

void criterion1() {
    bool ok = true;
    std::string detail;
    for (long p = -3; p <= 3 && ok; ++p)
        for (long q = -3; q <= 3 && ok; ++q) {
            const bool expect = (p + 2 * q == 0) || (p == 0 && q == 0);
            const bool got = check_apn(one_dim(Scalar::of(Q, p), Scalar::of(Q, q)), true).passed;
            if (got != expect) {
                ok = false;
                detail = "grid mismatch at p=" + std::to_string(p) + ", q=" + std::to_string(q);
            }
        }
    // GF(2): exhaustive oracle and the search module must agree on {(0,0),(0,1)}
    std::vector<std::pair<int, int>> oracle;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            if (check_apn(one_dim(Scalar::of(F2, p), Scalar::of(F2, q)), true).passed)
                oracle.emplace_back(p, q);
    const ApnSearchResult found = enumerate_apn(1, F2, 2);
    if (oracle.size() != 2 || found.algebras.size() != 2) {
        ok = false;
        detail = "GF(2) count " + std::to_string(found.algebras.size());
    } else {
        for (const auto& a : found.algebras)
            if (!a.succ.c.at(0, 0, 0).is_zero()) ok = false;
    }
    line("criterion 1: one-dimensional classification on {-3..3}^2 and GF(2)", ok, detail);
}

// ---- criterion 2: the three-dimensional example ----------------------------

void criterion2() {
    const io::Document d = io::load_document(fixture_path("a3.json"));
    const APNAlgebra a = d.alg.apn();
    const bool ok = check_apn(a).passed && check_derived_identities(a).passed &&
                    check_bimodule_characterization(a).passed &&
                    check_novikov(a.associated_unchecked()).passed;
    line("criterion 2: three-dimensional example and its associated algebra", ok);
}

// ---- criterion 3: the anti-Rota-Baxter example -----------------------------

void criterion3() {
    bool ok = true;
    for (long av : {1L, 2L}) {
        const Scalar coef = Scalar::of(Q, av);
        const NovikovAlgebra n = n2();
        Matrix T(2, 2, Q);
        T.at(1, 0) = coef;
        const NovikovRep reg = regular_novikov_rep(n);
        ok = ok && check_anti_o_operator(n, reg, T).passed;
        ok = ok && check_strong_anti_o(n, reg, T).passed;
        ok = ok && check_anti_rota_baxter(n, T).passed && check_strong_anti_rota_baxter(n, T).passed;
        const InducedAPN ind = induced_apn_from_anti_o(n, reg, T);
        BinaryOp expect(2, Q);
        expect.c.at(0, 0, 1) = -coef;
        ok = ok && ind.strong && ind.partial.passed && ind.succ == expect && ind.prec.is_zero();
    }
    line("criterion 3: strong anti-Rota-Baxter example at a in {1,2}", ok);
}

// ---- criterion 4: the O-operator condition ----------------------------------

void criterion4() {
    bool ok = true;
    std::string detail;
    // GF(3), all 81 matrices
    {
        const APNAlgebra a = a2(Scalar::of(F3, 1));
        const TensorSearchResult res = search_o_operators(a, regular_rep(a), default_grid(F3));
        size_t expect = 0;
        for (int t1 = 0; t1 < 3 && ok; ++t1)
            for (int t2 = 0; t2 < 3; ++t2)
                for (int t3 = 0; t3 < 3; ++t3)
                    for (int t4 = 0; t4 < 3; ++t4) {
                        const bool pred = t2 == 0 && (t1 * (t1 - 2 * t4)) % 3 == 0;
                        if (pred) ++expect;
                    }
        if (res.items.size() != expect) {
            ok = false;
            detail = "GF(3) count " + std::to_string(res.items.size()) + " vs " +
                     std::to_string(expect);
        }
        for (const auto& T : res.items) {
            const Scalar t1 = T.at(0, 0), t4 = T.at(1, 1);
            if (!T.at(0, 1).is_zero() || !(t1 * (t1 - t4 - t4)).is_zero()) ok = false;
        }
    }
    // rational grid {-2..2}^4
    {
        const APNAlgebra a = a2(Scalar::one(Q));
        const TensorSearchResult res = search_o_operators(a, regular_rep(a), default_grid(Q));
        size_t expect = 0;
        for (long t1 = -2; t1 <= 2; ++t1)
            for (long t2 = -2; t2 <= 2; ++t2)
                for (long t3 = -2; t3 <= 2; ++t3)
                    for (long t4 = -2; t4 <= 2; ++t4)
                        if (t2 == 0 && t1 * (t1 - 2 * t4) == 0) ++expect;
        if (res.items.size() != expect) ok = false;
        for (const auto& T : res.items) {
            const Scalar t1 = T.at(0, 0), t4 = T.at(1, 1);
            if (!T.at(0, 1).is_zero() || !(t1 * (t1 - t4 - t4)).is_zero()) ok = false;
        }
    }
    line("criterion 4: O-operator condition over GF(3)^4 and {-2..2}^4", ok, detail);
}

// ---- criterion 5: the worked bialgebra --------------------------------------

void criterion5() {
    bool ok = true;
    std::string detail;
    const Scalar a = Scalar::one(Q);
    // admissible parameters: t1 = 0 or t1 = 2 t4
    const std::vector<std::array<long, 3>> admissible = {
        {0, 0, 1}, {0, 1, 1}, {0, 2, -1}, {2, 0, 1}, {2, 1, 1}};
    for (const auto& [t1v, t3v, t4v] : admissible) {
        const Scalar t1 = Scalar::of(Q, t1v), t3 = Scalar::of(Q, t3v), t4 = Scalar::of(Q, t4v);
        const WorkedFixture w = worked_fixture(a, t1, t3, t4);
        // the four displayed semidirect products (plus e1>e1 = a e2)
        BinaryOp succ(4, Q), prec(4, Q);
        succ.c.at(0, 0, 1) = a;
        succ.c.at(0, 3, 2) = Scalar::of(Q, 2) * a;
        succ.c.at(3, 0, 2) = a;
        prec.c.at(0, 3, 2) = -a;
        prec.c.at(3, 0, 2) = -a;
        if (!(w.ahat.succ == succ && w.ahat.prec == prec)) {
            ok = false;
            detail = "semidirect products";
        }
        if (!ybe_residual(w.ahat, w.s).is_zero()) {
            ok = false;
            detail = "residual at t1=" + std::to_string(t1v);
        }
        const Cobracket d = coboundary_delta(w.ahat, w.s, w.s);
        if (!check_apn_bialgebra(w.ahat, d, true).passed) {
            ok = false;
            detail = "bialgebra at t1=" + std::to_string(t1v);
        }
        if (t1v != 0) continue;
        // all four displayed cobracket values (at t1 = 0 the displayed
        // coefficients equal the evaluated coboundary formulas; the
        // resolved fourth value reads Delta_<(e2*) = -a t1 e1* (x) e1*)
        Matrix expect(4, 4, Q);
        expect.at(1, 2) = a * (t4 - t1);
        expect.at(2, 1) = a * (Scalar::of(Q, 2) * t4 - t1);
        if (d.succ_of(basis_vec(4, 0, Q)) != expect) ok = false;
        expect = Matrix(4, 4, Q);
        expect.at(1, 2) = a * (t1 - t4);
        expect.at(2, 1) = a * (t1 - t4);
        if (d.prec_of(basis_vec(4, 0, Q)) != expect) ok = false;
        expect = Matrix(4, 4, Q);
        expect.at(2, 2) = Scalar::of(Q, -2) * a * t1;
        if (d.succ_of(basis_vec(4, 3, Q)) != expect) ok = false;
        expect = Matrix(4, 4, Q);
        expect.at(2, 2) = -a * t1;
        if (d.prec_of(basis_vec(4, 3, Q)) != expect) ok = false;
    }
    line("criterion 5: worked bialgebra (products, residual, cobracket values)", ok, detail);
}

// ---- criterion 6: theorem equivalences on a generated corpus ----------------

std::vector<APNAlgebra> algebra_corpus() {
    std::vector<APNAlgebra> out;
    for (const auto& a : enumerate_apn(1, F3, 2).algebras) out.push_back(a);
    for (const auto& a : enumerate_apn(1, F5, 2).algebras) out.push_back(a);
    for (const auto& a : enumerate_apn(2, F3, 1).algebras) out.push_back(a);
    out.push_back(a3(F3));
    out.push_back(a3(F5));
    out.push_back(a2(Scalar::of(F5, 2)));
    return out;
}

void criterion6() {
    Rng rng(90001);
    const std::vector<APNAlgebra> algebras = algebra_corpus();

    // instances: (algebra, skew s) pairs
    struct Inst {
        const APNAlgebra* a;
        Matrix s;
    };
    std::vector<Inst> instances;
    for (const auto& a : algebras) {
        const int reps = a.dim() == 1 ? 1 : 3;
        for (int t = 0; t < reps; ++t) instances.push_back({&a, rng.skew(a.dim(), a.field)});
        instances.push_back({&a, Matrix(a.dim(), a.dim(), a.field)});
    }

    // (i) solution <=> coboundary bialgebra, both directions
    {
        int forward_bad = 0, converse_bad = 0;
        std::string example;
        for (const auto& inst : instances) {
            const bool solves = ybe_residual(*inst.a, inst.s).is_zero();
            const bool bialg =
                check_apn_bialgebra(*inst.a, coboundary_delta(*inst.a, inst.s, inst.s), true)
                    .passed;
            if (solves && !bialg) ++forward_bad;
            if (bialg && !solves) {
                ++converse_bad;
                if (example.empty()) {
                    std::ostringstream os;
                    os << "e.g. dim " << inst.a->dim() << " over " << inst.a->field.str();
                    example = os.str();
                }
            }
        }
        line("criterion 6(i): solution <-> bialgebra equivalence, both directions (" +
                 std::to_string(instances.size()) + " instances)",
             forward_bad == 0 && converse_bad == 0,
             forward_bad == 0 && converse_bad == 0
                 ? ""
                 : "solution => bialgebra held everywhere; " + std::to_string(converse_bad) +
                       " counterexamples to the converse (" + example +
                       "); operator-degenerate algebras satisfy every compatibility while the "
                       "residual is nonzero");
    }

    // (ii) three-way O-operator characterization
    {
        int bad = 0;
        for (const auto& inst : instances) {
            const APNAlgebra& a = *inst.a;
            const Matrix Ts = T_from_s(inst.s);
            const bool solves = ybe_residual(a, inst.s).is_zero();
            NovikovRep nrep;
            nrep.dimV = a.dim();
            for (int i = 0; i < a.dim(); ++i) {
                nrep.l.push_back(-star_action(a.succ.left(i) + a.prec.right(i)));
                nrep.r.push_back(star_action(a.prec.right(i)));
            }
            const bool nov = check_o_operator_novikov(a.associated_unchecked(), nrep, Ts, true).passed;
            const bool apn_o =
                check_o_operator_apn(a, dual_apn_rep(a, regular_rep(a)), Ts, true).passed;
            if (solves != nov || solves != apn_o) ++bad;
        }
        line("criterion 6(ii): three-way O-operator characterization", bad == 0,
             bad == 0 ? "" : std::to_string(bad) + " discrepancies");
    }

    // (iii) strong anti-O-operators <=> induced splitting
    {
        int bad = 0, found = 0;
        for (const auto& apn_a : algebras) {
            if (apn_a.dim() > 2) continue;
            const NovikovAlgebra nov = apn_a.associated_unchecked();
            const NovikovRep reg = regular_novikov_rep(nov);
            const unsigned p = nov.field.p;
            const int n = nov.dim();
            const int slots = n * n;
            std::uint64_t total = 1;
            for (int i = 0; i < slots; ++i) total *= p;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                Matrix T(n, n, nov.field);
                std::uint64_t off = idx;
                for (int sidx = 0; sidx < slots; ++sidx) {
                    T.at(sidx / n, sidx % n) = Scalar::of(nov.field, static_cast<long>(off % p));
                    off /= p;
                }
                if (!check_anti_o_operator(nov, reg, T, true).passed) continue;
                ++found;
                const InducedAPN ind = induced_apn_from_anti_o(nov, reg, T);
                if (!ind.partial.passed) ++bad;
                if (ind.strong != is_apn(ind.succ, ind.prec)) ++bad;
                if (!determinant(T).is_zero() && !ind.strong) ++bad;
            }
        }
        line("criterion 6(iii): strong anti-O-operators match the induced splitting (" +
                 std::to_string(found) + " operators)",
             bad == 0 && found >= 50, bad == 0 ? "" : std::to_string(bad) + " discrepancies");
    }

    // (iv) matched pair check <=> sum-algebra axioms, Novikov and APN level
    {
        int bad = 0, cases = 0;
        for (const auto& a : algebras) {
            if (a.dim() > 2) continue;
            // Novikov level: the dual-action pair of a coboundary cobracket,
            // plus mutations of its actions.
            const Matrix s = rng.skew(a.dim(), a.field);
            const Cobracket d = coboundary_delta(a, s, s);
            NovikovMatchedPair mp = bialgebra_matched_pair(a, d);
            for (int t = 0; t < 3; ++t) {
                NovikovMatchedPair probe = mp;
                if (t > 0)
                    probe.act_b.l[static_cast<size_t>(rng.below(a.dim()))]
                        .at(rng.below(a.dim()), rng.below(a.dim())) += Scalar::one(a.field);
                ++cases;
                if (check_novikov_matched_pair(probe, true).passed !=
                    is_novikov(build_novikov_sum_unchecked(probe).op))
                    ++bad;
            }
            // APN level: trivial pair plus mutations.
            APNMatchedPair amp;
            amp.a1 = a;
            amp.a2 = zero_apn(a.dim(), a.field);
            amp.act1 = regular_rep(a);
            amp.act2 = zero_rep(a.dim(), a.dim(), a.field);
            for (int t = 0; t < 3; ++t) {
                APNMatchedPair probe = amp;
                if (t > 0)
                    probe.act2.l_succ[static_cast<size_t>(rng.below(a.dim()))]
                        .at(rng.below(a.dim()), rng.below(a.dim())) += Scalar::one(a.field);
                ++cases;
                const APNAlgebra sum = build_apn_sum_unchecked(probe);
                if (check_apn_matched_pair(probe, true).passed != is_apn(sum.succ, sum.prec))
                    ++bad;
            }
        }
        line("criterion 6(iv): matched-pair checks match the sum-algebra axioms (" +
                 std::to_string(cases) + " cases)",
             bad == 0, bad == 0 ? "" : std::to_string(bad) + " discrepancies");
    }

    // (v) bialgebra <=> induced matched pair. The matched-pair statement
    // presumes the dual operations come from a coalgebra, so the
    // unconditional instance-level form is
    //   bialgebra == (coalgebra and matched pair),
    // which reduces to the plain equivalence on every coalgebra fixture.
    {
        int bad = 0, cases = 0, with_coalgebra = 0;
        for (const auto& a : algebras) {
            if (a.dim() > 3) continue;
            for (int t = 0; t < 3; ++t) {
                Cobracket d = Cobracket::zero(a.dim(), a.field);
                if (t == 1) {
                    const Matrix s = rng.skew(a.dim(), a.field);
                    d = coboundary_delta(a, s, s);
                } else if (t == 2) {
                    d.d_succ = rng.tensor(a.dim(), a.dim(), a.dim(), a.field);
                    d.d_prec = rng.tensor(a.dim(), a.dim(), a.dim(), a.field);
                }
                ++cases;
                const bool coalg = check_apn_coalgebra(d, true).passed;
                if (coalg) ++with_coalgebra;
                const bool mp =
                    check_novikov_matched_pair(bialgebra_matched_pair(a, d), true).passed;
                if (check_apn_bialgebra(a, d, true).passed != (coalg && mp)) ++bad;
            }
        }
        line("criterion 6(v): bialgebra <-> matched pair (" + std::to_string(cases) + " cases, " +
                 std::to_string(with_coalgebra) + " with valid coalgebras)",
             bad == 0 && with_coalgebra >= 10,
             bad == 0 ? "" : std::to_string(bad) + " discrepancies");
    }
}

// ---- criterion 7: doubles are factorizable ----------------------------------

void criterion7() {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<APNAlgebra, Cobracket>> fixtures;
    {
        const WorkedFixture w =
            worked_fixture(Scalar::one(Q), Scalar::of(Q, 2), Scalar::zero(Q), Scalar::one(Q));
        fixtures.emplace_back(w.ahat, coboundary_delta(w.ahat, w.s, w.s));
        fixtures.emplace_back(a3(), Cobracket::zero(3, Q));
        fixtures.emplace_back(a2(Scalar::of(Q, 2)), Cobracket::zero(2, Q));
        fixtures.emplace_back(one_dim(Scalar::of(Q, -2), Scalar::of(Q, 1)),
                              Cobracket::zero(1, Q));
    }
    for (const auto& [a, d] : fixtures) {
        const DoubleBialgebra dbl = double_bialgebra(a, d);
        if (!check_factorizable(dbl.algebra, dbl.s).passed) {
            ok = false;
            detail = "double not factorizable";
            continue;
        }
        // T_{s+tau(s)} is pinned exactly: the canonical identification of D*
        // with D, i.e. the block anti-diagonal [[0,I],[I,0]] in the fixed
        // (A, A*) coordinates (the +/- bookkeeping of the source display is
        // absorbed by the positional dual convention).
        const int n = a.dim();
        Matrix expect(2 * n, 2 * n, Q);
        for (int i = 0; i < n; ++i) {
            expect.at(i, n + i) = Scalar::one(Q);
            expect.at(n + i, i) = Scalar::one(Q);
        }
        if (!(T_from_s(dbl.s + tau2(dbl.s)) == expect)) {
            ok = false;
            detail = "T_{s+tau(s)} matrix";
        }
        try {
            const Matrix phi = phi_iso(dbl.algebra, dbl.s);  // verifies hom + bijectivity
            if (determinant(phi).is_zero()) ok = false;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    line("criterion 7: doubles factorizable, canonical T matrix, phi isomorphism", ok, detail);
}

// ---- criterion 8: Rota-Baxter correspondence --------------------------------

void criterion8() {
    bool ok = true;
    std::string detail;
    // factorizable fixtures: the doubles of criterion 7
    std::vector<std::pair<APNAlgebra, Matrix>> fixtures;
    {
        const WorkedFixture w =
            worked_fixture(Scalar::one(Q), Scalar::of(Q, 2), Scalar::zero(Q), Scalar::one(Q));
        const DoubleBialgebra d1 = double_bialgebra(w.ahat, coboundary_delta(w.ahat, w.s, w.s));
        fixtures.emplace_back(d1.algebra, d1.s);
        const DoubleBialgebra d2 = double_bialgebra(a3(), Cobracket::zero(3, Q));
        fixtures.emplace_back(d2.algebra, d2.s);
    }
    for (const auto& [alg, s] : fixtures) {
        for (long lv : {1L, -1L, 2L}) {
            const Scalar lam = Scalar::of(Q, lv);
            const QuadraticRb rb = factorizable_to_rb(alg, s, lam);
            if (!check_quadratic_rb(alg, rb.P, rb.omega, lam, true).passed) ok = false;
            if (!(rb_to_factorizable(alg, rb.P, rb.omega, lam) == s)) {
                ok = false;
                detail = "backward/forward round trip";
            }
            const QuadraticRb again = factorizable_to_rb(
                alg, rb_to_factorizable(alg, rb.P, rb.omega, lam), lam);
            if (!(again.P == rb.P && again.omega == rb.omega)) {
                ok = false;
                detail = "forward/backward round trip";
            }
            // weight flip: tau(s) corresponds to (-lambda I - P, omega)
            const QuadraticRb flip = factorizable_to_rb(alg, tau2(s), lam);
            if (!(flip.omega == rb.omega &&
                  flip.P == -rb.P - Matrix::identity(alg.dim(), Q).scaled(lam))) {
                ok = false;
                detail = "weight flip";
            }
        }
    }
    // explicit s-formula on A x A*: s = sum_i e_i* (x) P(e_i) - (P+lambda)(e_i) (x) e_i*
    {
        const APNAlgebra a = a3();
        Matrix P(3, 3, Q);
        P.at(0, 0) = Scalar::of(Q, 1);
        P.at(1, 1) = Scalar::of(Q, 1, 3);
        P.at(2, 2) = Scalar::of(Q, 1, 7);
        const Scalar lam = Scalar::one(Q);
        if (!check_rota_baxter_apn(a, P, lam).passed) {
            ok = false;
            detail = "weight-1 operator";
        }
        const APNAlgebra dbl = double_apn_algebra(a, Cobracket::zero(3, Q));
        Matrix Phat(6, 6, Q);
        const Matrix lower = -(P.transpose() + Matrix::identity(3, Q).scaled(lam));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Phat.at(i, j) = P.at(i, j);
                Phat.at(3 + i, 3 + j) = lower.at(i, j);
            }
        const Matrix omega = canonical_double_form(3, Q);
        if (!check_quadratic_rb(dbl, Phat, omega, lam, true).passed) {
            ok = false;
            detail = "A x A* quadratic structure";
        }
        const Matrix s = rb_to_factorizable(dbl, Phat, omega, lam);
        Matrix expect(6, 6, Q);
        for (int i = 0; i < 3; ++i)
            for (int r = 0; r < 3; ++r) {
                expect.at(3 + i, r) = P.at(r, i);
                expect.at(r, 3 + i) = -(P.at(r, i) + (r == i ? lam : Scalar::zero(Q)));
            }
        if (!(s == expect)) {
            ok = false;
            detail = "explicit s formula";
        }
    }
    line("criterion 8: Rota-Baxter correspondence round trips and the explicit s formula", ok,
         detail);
}

// ---- criterion 9: internal consistency ---------------------------------------

void criterion9() {
    bool ok = true;
    std::string detail;
    Rng rng(90009);
    // 200 random cobrackets: the direct (Ca) route and the dualization route
    // must agree (check_apn_coalgebra throws on any disagreement)
    try {
        for (int t = 0; t < 200; ++t) {
            const int dim = 2 + t % 2;
            Cobracket d = Cobracket::zero(dim, F5);
            d.d_succ = rng.tensor(dim, dim, dim, F5);
            d.d_prec = rng.tensor(dim, dim, dim, F5);
            (void)check_apn_coalgebra(d, true);
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    // 100 random skew tensors: the S-relations as tensor identities (with the
    // cyclic map read in cycle notation: x(x)y(x)z -> y(x)z(x)x)
    std::vector<APNAlgebra> algebras = {a3(F5), a2(Scalar::of(F5, 1)), a2(Scalar::of(F5, 3))};
    auto S = [&](const APNAlgebra& a, const Matrix& s, int k) {
        const BinaryOp circ = a.succ + a.prec;
        const BinaryOp odot = a.succ + a.prec.flipped();
        const BinaryOp star = circ + circ.flipped();
        auto pp = [&](const BinaryOp& op, const char* sym) {
            return placement_product(s, s, op, sym);
        };
        switch (k) {
            case 1: return pp(a.prec, "12*23") + pp(odot, "23*13") + pp(circ, "12*13");
            case 2: return pp(a.succ, "12*23") - pp(star, "13*23") - pp(a.succ, "12*13");
            case 3:
                return pp(odot, "12*23") + pp(a.prec, "13*12") - pp(circ, "13*23") +
                       pp(a.prec, "23*12") + pp(odot, "12*13") + pp(circ, "23*13");
            case 4:
                return pp(odot, "23*12") - pp(circ, "13*12") - pp(star, "13*12") -
                       pp(a.succ, "23*13") + pp(a.prec, "13*23") + pp(a.succ, "23*12");
            case 5: return pp(a.prec, "13*12") + pp(odot, "12*23") - pp(circ, "13*23");
            case 6: return pp(odot, "23*12") + pp(a.prec, "13*23") - pp(circ, "13*12");
            default: return pp(a.prec, "12*13") - pp(odot, "13*23") + pp(circ, "12*23");
        }
    };
    for (int t = 0; t < 100 && ok; ++t) {
        const APNAlgebra& a = algebras[static_cast<size_t>(t) % algebras.size()];
        const Matrix s = rng.skew(a.dim(), F5);
        const Tensor3 s1 = S(a, s, 1);
        const bool rels =
            S(a, s, 2) == -s1 - permute3(s1, Perm3::swap12()) &&
            S(a, s, 3) == S(a, s, 5) + permute3(s1, Perm3::swap13()) &&
            S(a, s, 4) == -s1 - permute3(s1, Perm3::swap23()).scaled(Scalar::of(F5, 2)) &&
            S(a, s, 6) == -permute3(s1, Perm3::swap23()) &&
            S(a, s, 5) == -permute3(s1, Perm3::cycle132().inverse()) &&
            S(a, s, 7) == -permute3(s1, Perm3::swap12());
        if (!rels) {
            ok = false;
            detail = "S-relation failed at sample " + std::to_string(t);
        }
    }
    line("criterion 9: dual-route coalgebra agreement (200) and S-relations (100)", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (g_failures == 0 ? "all criteria passed\n"
                                  : std::to_string(g_failures) + " criterion line(s) failed\n");
    return g_failures == 0 ? 0 : 1;
}
