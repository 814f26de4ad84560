// Command line front end: loads JSON fixture documents, runs the requested
// verification or construction, and emits stable JSON reports.
// Exit codes: 0 all checks passed, 1 an identity failed, 2 usage/input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "apn/io.hpp"

using namespace apn;
namespace io = apn::io;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::vector<std::string> params;
    bool gf_coerce = false;
    std::string json_out;
    std::string weight = "0";
};

io::LoadOptions load_options(const CommonOpts& c) {
    io::LoadOptions opt;
    opt.gf_coerce = c.gf_coerce;
    for (const auto& p : c.params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos)
            throw io::ParseError("--param expects name=value, got '" + p + "'");
        opt.params[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return opt;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--param", c.params, "bind a named coefficient, e.g. --param a=1");
    cmd->add_flag("--gf-coerce", c.gf_coerce, "allow n/d literals in prime-field documents");
    cmd->add_option("--json-out", c.json_out, "also write the JSON output to this path");
}

int emit(const std::string& text, const CommonOpts& c, int code) {
    std::cout << text;
    if (!c.json_out.empty()) io::write_file(c.json_out, text);
    return code;
}

int emit_report(const std::string& subject, const IdentityReport& rep, const CommonOpts& c) {
    return emit(io::report_json(subject, rep), c, rep.passed ? 0 : 1);
}

Scalar parse_weight(const io::Document& d, const CommonOpts& c) {
    return Scalar::parse(d.alg.field, c.weight, true);
}

const Matrix& need(const std::optional<Matrix>& m, const char* what) {
    if (!m) throw io::ParseError(std::string("document is missing '") + what + "'");
    return *m;
}

AAPNStructure aapn_from_doc(const io::Document& d) {
    AAPNStructure s;
    s.host = d.alg.apn();
    if (!d.arep) throw io::ParseError("document is missing an anti-pre-Novikov representation");
    s.rep = *d.arep;
    const FieldSpec f = d.alg.field;
    s.v_succ = d.v_succ ? *d.v_succ : BinaryOp::zero(s.rep.dimV, f);
    s.v_prec = d.v_prec ? *d.v_prec : BinaryOp::zero(s.rep.dimV, f);
    return s;
}

IdentityReport run_verify(const std::string& what, const io::Document& d, const CommonOpts& c,
                          bool strong) {
    if (what == "novikov") return check_novikov(d.alg.novikov());
    if (what == "apn") return check_apn(d.alg.apn());
    if (what == "rep") {
        if (d.arep) return check_apn_rep(d.alg.apn(), *d.arep);
        if (d.nrep) return check_novikov_rep(d.alg.novikov(), *d.nrep);
        throw io::ParseError("document carries no representation");
    }
    if (what == "coalgebra") {
        if (!d.cobracket) throw io::ParseError("document carries no cobracket");
        return check_apn_coalgebra(*d.cobracket);
    }
    if (what == "bialgebra") {
        if (!d.cobracket) throw io::ParseError("document carries no cobracket");
        return check_apn_bialgebra(d.alg.apn(), *d.cobracket);
    }
    if (what == "matched-pair") {
        if (!d.pair) throw io::ParseError("document carries no pair");
        return d.pair->apn_actions ? check_apn_matched_pair(d.pair->apn_pair())
                                   : check_novikov_matched_pair(d.pair->novikov_pair());
    }
    if (what == "quasi-frobenius")
        return check_quasi_frobenius(d.alg.novikov(), need(d.omega, "omega"));
    if (what == "quadratic") return check_quadratic_apn(d.alg.apn(), need(d.omega, "omega"));
    if (what == "rb") {
        const Scalar lam = parse_weight(d, c);
        if (d.omega) return check_quadratic_rb(d.alg.apn(), need(d.P, "P"), *d.omega, lam);
        return check_rota_baxter_apn(d.alg.apn(), need(d.P, "P"), lam);
    }
    if (what == "relative-rb")
        return check_relative_rb(aapn_from_doc(d), need(d.T, "T"), parse_weight(d, c));
    if (what == "anti-o") {
        if (!d.nrep) throw io::ParseError("anti-o expects a Novikov representation");
        IdentityReport rep = check_anti_o_operator(d.alg.novikov(), *d.nrep, need(d.T, "T"));
        if (strong) rep.merge(check_strong_anti_o(d.alg.novikov(), *d.nrep, *d.T));
        return rep;
    }
    if (what == "o-operator") {
        const APNAlgebra a = d.alg.apn();
        const APNRep rep = d.arep ? *d.arep : regular_rep(a);
        return check_o_operator_apn(a, rep, need(d.T, "T"));
    }
    if (what == "quasi-triangular") return check_quasi_triangular(d.alg.apn(), need(d.s, "s"));
    if (what == "factorizable") return check_factorizable(d.alg.apn(), need(d.s, "s"));
    throw io::ParseError("unknown verify target '" + what + "'");
}

io::Document run_build(const std::string& what, const io::Document& d) {
    io::Document out;
    out.alg.field = d.alg.field;
    if (what == "associated") {
        const NovikovAlgebra nov = associated_novikov(d.alg.apn());
        out.alg.dim = nov.dim();
        out.alg.circ = nov.op;
        return out;
    }
    if (what == "semidirect") {
        if (!d.arep) throw io::ParseError("semidirect expects a representation");
        const APNAlgebra sd = semidirect_apn(d.alg.apn(), *d.arep);
        out.alg.dim = sd.dim();
        out.alg.succ = sd.succ;
        out.alg.prec = sd.prec;
        return out;
    }
    if (what == "dual-rep") {
        if (!d.arep) throw io::ParseError("dual-rep expects a representation");
        out.alg = d.alg;
        out.arep = dual_apn_rep(d.alg.apn(), *d.arep);
        return out;
    }
    if (what == "matched-sum") {
        if (!d.pair) throw io::ParseError("matched-sum expects a pair");
        if (d.pair->apn_actions) {
            const APNAlgebra sum = build_apn_sum(d.pair->apn_pair());
            out.alg.dim = sum.dim();
            out.alg.succ = sum.succ;
            out.alg.prec = sum.prec;
        } else {
            const NovikovAlgebra sum = build_novikov_sum(d.pair->novikov_pair());
            out.alg.dim = sum.dim();
            out.alg.circ = sum.op;
        }
        return out;
    }
    if (what == "double") {
        if (!d.cobracket) throw io::ParseError("double expects a cobracket");
        const APNAlgebra a = d.alg.apn();
        const DualOps dual = dualize_cobracket(*d.cobracket);
        const DoubleConstruction dc = build_double_construction(
            double_construction_pair(a, APNAlgebra{a.field, dual.succ, dual.prec}));
        out.alg.dim = dc.algebra.dim();
        out.alg.circ = dc.algebra.op;
        out.omega = dc.omega;
        return out;
    }
    if (what == "coboundary") {
        const APNAlgebra a = d.alg.apn();
        const Matrix& ss = d.s_succ ? *d.s_succ : need(d.s, "s");
        const Matrix& sp = d.s_prec ? *d.s_prec : need(d.s, "s");
        out.alg = d.alg;
        out.cobracket = coboundary_delta(a, ss, sp);
        return out;
    }
    if (what == "compatible-apn") {
        const APNAlgebra split = apn_from_quasi_frobenius(d.alg.novikov(), need(d.omega, "omega"));
        out.alg.dim = split.dim();
        out.alg.succ = split.succ;
        out.alg.prec = split.prec;
        out.omega = d.omega;
        return out;
    }
    if (what == "double-bialgebra") {
        if (!d.cobracket) throw io::ParseError("double-bialgebra expects a cobracket");
        const DoubleBialgebra dbl = double_bialgebra(d.alg.apn(), *d.cobracket);
        out.alg.dim = dbl.algebra.dim();
        out.alg.succ = dbl.algebra.succ;
        out.alg.prec = dbl.algebra.prec;
        out.s = dbl.s;
        out.cobracket = dbl.delta;
        return out;
    }
    throw io::ParseError("unknown build target '" + what + "'");
}

std::vector<Scalar> grid_from_flag(FieldSpec f, const std::string& flag) {
    if (flag.empty()) return default_grid(f);
    const auto dots = flag.find("..");
    if (dots == std::string::npos)
        throw io::ParseError("--grid expects lo..hi, got '" + flag + "'");
    const long lo = std::stol(flag.substr(0, dots));
    const long hi = std::stol(flag.substr(dots + 2));
    std::vector<Scalar> v;
    for (long k = lo; k <= hi; ++k) v.push_back(Scalar::of(f, k));
    return v;
}

FieldSpec field_from_flag(const std::string& flag) {
    if (flag.empty() || flag == "q" || flag == "Q" || flag == "rational")
        return FieldSpec::rationals();
    if (flag.rfind("gf", 0) == 0)
        return FieldSpec::gf(static_cast<unsigned>(std::stoul(flag.substr(2))));
    throw io::ParseError("--field expects 'q' or 'gf<p>', got '" + flag + "'");
}

json json_sparse(const Matrix& m) {
    json arr = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) arr.push_back(json::array({i, j, m.at(i, j).str()}));
    return arr;
}

json json_vec(const Vec& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier and search tool for Novikov and anti-pre-Novikov structures"};
    app.require_subcommand(1);

    CommonOpts copt;
    std::string what, file, starget, xflag, fieldflag, gridflag;
    bool skew_only = false, strong = false, companions = false;
    std::uint64_t budget = 2'000'000;
    int workers = 1, dim = 1, sparsity = 1;

    auto* verify = app.add_subcommand("verify", "run an identity-family checker");
    verify->add_option("what", what,
                       "novikov|apn|rep|coalgebra|bialgebra|matched-pair|quasi-frobenius|"
                       "quadratic|rb|relative-rb|anti-o|o-operator|quasi-triangular|factorizable")
        ->required();
    verify->add_option("file", file, "fixture document")->required();
    verify->add_option("--weight", copt.weight, "Rota-Baxter weight lambda");
    verify->add_flag("--strong", strong, "for anti-o: also require the strong condition");
    add_common(verify, copt);

    auto* build = app.add_subcommand("build", "run a construction and print the result document");
    build->add_option("what", what,
                      "associated|semidirect|dual-rep|matched-sum|double|coboundary|"
                      "compatible-apn|double-bialgebra")
        ->required();
    build->add_option("file", file, "fixture document")->required();
    add_common(build, copt);

    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter residual checks and searches");
    ybe->add_option("what", what, "check|search")->required();
    ybe->add_option("file", file, "fixture document")->required();
    ybe->add_option("--s", starget,
                    "'canonical': check the canonical tensor of the double of the fixture");
    ybe->add_flag("--skew-only", skew_only, "search skew-symmetric tensors only");
    ybe->add_flag("--companions", companions, "also report the companion residuals P1..P5");
    ybe->add_option("--budget", budget, "candidate cap for searches");
    ybe->add_option("--workers", workers, "worker threads for searches");
    ybe->add_option("--grid", gridflag, "rational search grid lo..hi");
    add_common(ybe, copt);

    auto* corr = app.add_subcommand("correspond", "Rota-Baxter / bialgebra correspondence");
    corr->add_option("what", what, "rb-to-bialgebra|bialgebra-to-rb")->required();
    corr->add_option("file", file, "fixture document")->required();
    corr->add_option("--weight", copt.weight, "weight lambda (nonzero)")->required();
    add_common(corr, copt);

    auto* fact = app.add_subcommand("factorize", "decompose x = x1 - x2 along a factorizable tensor");
    fact->add_option("file", file, "fixture document")->required();
    fact->add_option("--x", xflag, "comma-separated coordinates; defaults to the document's x");
    add_common(fact, copt);

    auto* search = app.add_subcommand("search", "exhaustive enumeration");
    search->add_option("what", what, "apn|o-operators")->required();
    search->add_option("file", file, "fixture document (o-operators only)");
    search->add_option("--dim", dim, "dimension for apn enumeration");
    search->add_option("--field", fieldflag, "q or gf<p>");
    search->add_option("--sparsity", sparsity, "max nonzero structure constants");
    search->add_option("--budget", budget, "candidate cap");
    search->add_option("--workers", workers, "worker threads");
    search->add_option("--grid", gridflag, "rational grid lo..hi");
    add_common(search, copt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help exits 0, every usage error exits 2
    }

    try {
        const io::LoadOptions lopt = load_options(copt);

        if (verify->parsed()) {
            const io::Document d = io::load_document(file, lopt);
            return emit_report(what, run_verify(what, d, copt, strong), copt);
        }

        if (build->parsed()) {
            const io::Document d = io::load_document(file, lopt);
            return emit(io::save_document(run_build(what, d)), copt, 0);
        }

        if (ybe->parsed()) {
            const io::Document d = io::load_document(file, lopt);
            if (what == "check") {
                APNAlgebra a = d.alg.apn();
                Matrix s(0, 0, a.field);
                if (!starget.empty()) {
                    if (starget != "canonical")
                        throw io::ParseError("--s only understands 'canonical'");
                    if (!d.cobracket) throw io::ParseError("canonical s needs a cobracket");
                    const DoubleBialgebra dbl = double_bialgebra(a, *d.cobracket);
                    a = dbl.algebra;
                    s = dbl.s;
                } else {
                    s = need(d.s, "s");
                }
                Checker ck(false);
                ck.require_zero("YE6", {}, ybe_residual(a, s));
                if (companions)
                    for (int k = 1; k <= 5; ++k)
                        ck.require_zero("P" + std::to_string(k), {}, ybe_companion(a, s, k));
                return emit_report("ybe", ck.take(), copt);
            }
            if (what == "search") {
                const APNAlgebra a = d.alg.apn();
                const TensorSearchResult res = search_ybe_solutions(
                    a, grid_from_flag(a.field, gridflag), skew_only, budget, workers);
                json j;
                j["count"] = res.items.size();
                j["examined"] = res.examined;
                j["truncated"] = res.truncated;
                json items = json::array();
                for (const auto& s : res.items) items.push_back(json_sparse(s));
                j["solutions"] = items;
                return emit(j.dump(2) + "\n", copt, 0);
            }
            throw io::ParseError("unknown ybe action '" + what + "'");
        }

        if (corr->parsed()) {
            const io::Document d = io::load_document(file, lopt);
            const APNAlgebra a = d.alg.apn();
            const Scalar lam = parse_weight(d, copt);
            io::Document out;
            out.alg = d.alg;
            if (what == "rb-to-bialgebra") {
                const Matrix s = rb_to_factorizable(a, need(d.P, "P"), need(d.omega, "omega"), lam);
                out.s = s;
                out.cobracket = coboundary_delta(a, s, s);
            } else if (what == "bialgebra-to-rb") {
                const QuadraticRb rb = factorizable_to_rb(a, need(d.s, "s"), lam);
                out.P = rb.P;
                out.omega = rb.omega;
            } else {
                throw io::ParseError("unknown correspondence '" + what + "'");
            }
            return emit(io::save_document(out), copt, 0);
        }

        if (fact->parsed()) {
            const io::Document d = io::load_document(file, lopt);
            const APNAlgebra a = d.alg.apn();
            Vec x;
            if (!xflag.empty()) {
                std::stringstream ss(xflag);
                std::string tok;
                while (std::getline(ss, tok, ',')) x.push_back(Scalar::parse(a.field, tok, true));
            } else if (d.x) {
                x = *d.x;
            } else {
                throw io::ParseError("factorize needs --x or an 'x' entry in the document");
            }
            const auto [x1, x2] = factorize(a, need(d.s, "s"), x);
            json j;
            j["x1"] = json_vec(x1);
            j["x2"] = json_vec(x2);
            return emit(j.dump(2) + "\n", copt, 0);
        }

        if (search->parsed()) {
            if (what == "apn") {
                const FieldSpec f = field_from_flag(fieldflag);
                const ApnSearchResult res =
                    enumerate_apn(dim, f, sparsity, budget, grid_from_flag(f, gridflag), workers);
                json j;
                j["count"] = res.algebras.size();
                j["examined"] = res.examined;
                j["truncated"] = res.truncated;
                json items = json::array();
                for (const auto& a : res.algebras) {
                    io::Document out;
                    out.alg.field = f;
                    out.alg.dim = dim;
                    out.alg.succ = a.succ;
                    out.alg.prec = a.prec;
                    items.push_back(json::parse(io::save_document(out)));
                }
                j["algebras"] = items;
                return emit(j.dump(2) + "\n", copt, 0);
            }
            if (what == "o-operators") {
                if (file.empty()) throw io::ParseError("search o-operators needs a fixture file");
                const io::Document d = io::load_document(file, lopt);
                const APNAlgebra a = d.alg.apn();
                const APNRep rep = d.arep ? *d.arep : regular_rep(a);
                const TensorSearchResult res = search_o_operators(
                    a, rep, grid_from_flag(a.field, gridflag), budget, workers);
                json j;
                j["count"] = res.items.size();
                j["examined"] = res.examined;
                j["truncated"] = res.truncated;
                json items = json::array();
                for (const auto& t : res.items) items.push_back(json_sparse(t));
                j["operators"] = items;
                return emit(j.dump(2) + "\n", copt, 0);
            }
            throw io::ParseError("unknown search target '" + what + "'");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
