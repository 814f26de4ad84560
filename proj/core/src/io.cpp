#include "apn/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace apn::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

FieldSpec parse_field(const json& j) {
    if (!j.contains("field") || !j["field"].is_object()) fail("field", "missing field object");
    const json& f = j["field"];
    const std::string kind = f.value("kind", "");
    if (kind == "rational") return FieldSpec::rationals();
    if (kind == "gf") {
        if (!f.contains("p") || !f["p"].is_number_unsigned()) fail("field.p", "missing prime modulus");
        return FieldSpec::gf(f["p"].get<unsigned>());
    }
    fail("field.kind", "expected \"rational\" or \"gf\", got \"" + kind + "\"");
}

// Coefficient literals: "n", "n/d", "name", "-name", "<rat>*name".
Scalar parse_coef(FieldSpec f, const std::string& text, const LoadOptions& opt,
                  const std::string& where) {
    std::string t = text;
    std::string factor = "1";
    const auto starpos = t.find('*');
    if (starpos != std::string::npos) {
        factor = t.substr(0, starpos);
        t = t.substr(starpos + 1);
    }
    if (!t.empty() && (isalpha(static_cast<unsigned char>(t[0])) ||
                       (t[0] == '-' && t.size() > 1 && isalpha(static_cast<unsigned char>(t[1]))))) {
        bool neg = t[0] == '-';
        const std::string name = neg ? t.substr(1) : t;
        auto it = opt.params.find(name);
        if (it == opt.params.end()) fail(where, "unbound parameter '" + name + "'");
        Scalar v = Scalar::parse(f, it->second, opt.gf_coerce);
        Scalar c = Scalar::parse(f, factor, opt.gf_coerce);
        Scalar r = c * v;
        return neg ? -r : r;
    }
    if (starpos != std::string::npos) fail(where, "bad coefficient '" + text + "'");
    try {
        return Scalar::parse(f, text, opt.gf_coerce);
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

BinaryOp parse_op(FieldSpec f, int dim, const json& entries, const LoadOptions& opt,
                  const std::string& where) {
    BinaryOp op(dim, f);
    if (!entries.is_array()) fail(where, "expected an array of [i,j,k,coef] entries");
    int n = 0;
    for (const auto& e : entries) {
        const std::string at = where + "[" + std::to_string(n++) + "]";
        if (!e.is_array() || e.size() != 4) fail(at, "expected [i,j,k,coef]");
        const int i = e[0].get<int>(), j = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            fail(at, "index out of range for dim " + std::to_string(dim));
        op.c.at(i, j, k) = parse_coef(f, e[3].get<std::string>(), opt, at);
    }
    return op;
}

Matrix parse_sparse_matrix(FieldSpec f, int rows, int cols, const json& entries,
                           const LoadOptions& opt, const std::string& where) {
    Matrix m(rows, cols, f);
    if (!entries.is_array()) fail(where, "expected an array of [i,j,coef] entries");
    int n = 0;
    for (const auto& e : entries) {
        const std::string at = where + "[" + std::to_string(n++) + "]";
        if (!e.is_array() || e.size() != 3) fail(at, "expected [i,j,coef]");
        const int i = e[0].get<int>(), j = e[1].get<int>();
        if (i < 0 || i >= rows || j < 0 || j >= cols) fail(at, "index out of range");
        m.at(i, j) = parse_coef(f, e[2].get<std::string>(), opt, at);
    }
    return m;
}

Matrix parse_dense_matrix(FieldSpec f, const json& rows, const LoadOptions& opt,
                          const std::string& where) {
    if (!rows.is_array() || rows.empty()) fail(where, "expected a dense matrix (array of rows)");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    Matrix m(r, c, f);
    for (int i = 0; i < r; ++i) {
        if (!rows[static_cast<size_t>(i)].is_array() ||
            static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            fail(where, "ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = parse_coef(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)].get<std::string>(), opt,
                                    where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return m;
}

std::vector<Matrix> parse_matrix_list(FieldSpec f, const json& arr, const LoadOptions& opt,
                                      const std::string& where) {
    std::vector<Matrix> out;
    if (!arr.is_array()) fail(where, "expected an array of matrices");
    int n = 0;
    for (const auto& e : arr)
        out.push_back(parse_dense_matrix(f, e, opt, where + "[" + std::to_string(n++) + "]"));
    return out;
}

Tensor3 parse_cobracket_part(FieldSpec f, int dim, const json& entries, const LoadOptions& opt,
                             const std::string& where) {
    Tensor3 t(dim, dim, dim, f);
    if (!entries.is_array()) fail(where, "expected an array of [i,j,k,coef] entries");
    int n = 0;
    for (const auto& e : entries) {
        const std::string at = where + "[" + std::to_string(n++) + "]";
        if (!e.is_array() || e.size() != 4) fail(at, "expected [i,j,k,coef]");
        const int i = e[0].get<int>(), j = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            fail(at, "index out of range for dim " + std::to_string(dim));
        t.at(i, j, k) = parse_coef(f, e[3].get<std::string>(), opt, at);
    }
    return t;
}

AlgebraDoc parse_algebra(const json& j, const LoadOptions& opt, const std::string& where) {
    AlgebraDoc a;
    a.field = parse_field(j);
    if (!j.contains("dim") || !j["dim"].is_number_integer()) fail(where + ".dim", "missing dim");
    a.dim = j["dim"].get<int>();
    if (a.dim <= 0) fail(where + ".dim", "dim must be positive");
    if (j.contains("ops")) {
        const json& ops = j["ops"];
        if (ops.contains("circ")) a.circ = parse_op(a.field, a.dim, ops["circ"], opt, where + ".ops.circ");
        if (ops.contains("succ")) a.succ = parse_op(a.field, a.dim, ops["succ"], opt, where + ".ops.succ");
        if (ops.contains("prec")) a.prec = parse_op(a.field, a.dim, ops["prec"], opt, where + ".ops.prec");
    }
    return a;
}

json json_field(FieldSpec f) {
    json j;
    j["kind"] = f.is_rational() ? "rational" : "gf";
    if (!f.is_rational()) j["p"] = f.p;
    return j;
}

json json_op(const BinaryOp& op) {
    json arr = json::array();
    for (int i = 0; i < op.dim; ++i)
        for (int j = 0; j < op.dim; ++j)
            for (int k = 0; k < op.dim; ++k)
                if (!op.c.at(i, j, k).is_zero())
                    arr.push_back(json::array({i, j, k, op.c.at(i, j, k).str()}));
    return arr;
}

json json_sparse_matrix(const Matrix& m) {
    json arr = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) arr.push_back(json::array({i, j, m.at(i, j).str()}));
    return arr;
}

json json_dense_matrix(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json json_matrix_list(const std::vector<Matrix>& v) {
    json arr = json::array();
    for (const auto& m : v) arr.push_back(json_dense_matrix(m));
    return arr;
}

json json_cobracket_part(const Tensor3& t) {
    json arr = json::array();
    for (int i = 0; i < t.dim1(); ++i)
        for (int j = 0; j < t.dim2(); ++j)
            for (int k = 0; k < t.dim3(); ++k)
                if (!t.at(i, j, k).is_zero()) arr.push_back(json::array({i, j, k, t.at(i, j, k).str()}));
    return arr;
}

}  // namespace

APNAlgebra AlgebraDoc::apn() const {
    if (!has_apn()) throw ParseError("document carries no succ/prec operations");
    return APNAlgebra{field, *succ, *prec};
}

NovikovAlgebra AlgebraDoc::novikov() const {
    if (circ) return NovikovAlgebra{field, *circ};
    if (has_apn()) return NovikovAlgebra{field, *succ + *prec};
    throw ParseError("document carries no circ operation");
}

NovikovMatchedPair PairDoc::novikov_pair() const {
    return NovikovMatchedPair{a.novikov(), b.novikov(), act_a, act_b};
}

APNMatchedPair PairDoc::apn_pair() const {
    return APNMatchedPair{a.apn(), b.apn(), act1, act2};
}

Document parse_document(const std::string& json_text, const LoadOptions& opt) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    Document d;
    d.alg = parse_algebra(j, opt, "");
    const FieldSpec f = d.alg.field;
    const int n = d.alg.dim;
    if (j.contains("rep")) {
        const json& r = j["rep"];
        const int dimV = r.value("dimV", n);
        if (r.contains("l_succ")) {
            APNRep rep;
            rep.dimV = dimV;
            rep.l_succ = parse_matrix_list(f, r["l_succ"], opt, "rep.l_succ");
            rep.r_succ = parse_matrix_list(f, r["r_succ"], opt, "rep.r_succ");
            rep.l_prec = parse_matrix_list(f, r["l_prec"], opt, "rep.l_prec");
            rep.r_prec = parse_matrix_list(f, r["r_prec"], opt, "rep.r_prec");
            d.arep = rep;
        } else if (r.contains("l")) {
            NovikovRep rep;
            rep.dimV = dimV;
            rep.l = parse_matrix_list(f, r["l"], opt, "rep.l");
            rep.r = parse_matrix_list(f, r["r"], opt, "rep.r");
            d.nrep = rep;
        } else {
            fail("rep", "expected l/r or l_succ/r_succ/l_prec/r_prec");
        }
    }
    if (j.contains("cobracket")) {
        Cobracket cb = Cobracket::zero(n, f);
        cb.d_succ = parse_cobracket_part(f, n, j["cobracket"]["d_succ"], opt, "cobracket.d_succ");
        cb.d_prec = parse_cobracket_part(f, n, j["cobracket"]["d_prec"], opt, "cobracket.d_prec");
        d.cobracket = cb;
    }
    if (j.contains("omega")) d.omega = parse_sparse_matrix(f, n, n, j["omega"], opt, "omega");
    if (j.contains("s")) d.s = parse_sparse_matrix(f, n, n, j["s"], opt, "s");
    if (j.contains("s_succ")) d.s_succ = parse_sparse_matrix(f, n, n, j["s_succ"], opt, "s_succ");
    if (j.contains("s_prec")) d.s_prec = parse_sparse_matrix(f, n, n, j["s_prec"], opt, "s_prec");
    if (j.contains("P")) d.P = parse_dense_matrix(f, j["P"], opt, "P");
    if (j.contains("T")) d.T = parse_dense_matrix(f, j["T"], opt, "T");
    if (j.contains("vops")) {
        const int dimV = d.arep ? d.arep->dimV : n;
        d.v_succ = parse_op(f, dimV, j["vops"]["succ"], opt, "vops.succ");
        d.v_prec = parse_op(f, dimV, j["vops"]["prec"], opt, "vops.prec");
    }
    if (j.contains("x")) {
        Vec x;
        int idx = 0;
        for (const auto& e : j["x"])
            x.push_back(parse_coef(f, e.get<std::string>(), opt, "x[" + std::to_string(idx++) + "]"));
        d.x = x;
    }
    if (j.contains("pair")) {
        const json& p = j["pair"];
        PairDoc pd;
        pd.a = parse_algebra(p["a"], opt, "pair.a");
        pd.b = parse_algebra(p["b"], opt, "pair.b");
        const json& act = p["actions"];
        if (act.contains("la")) {
            pd.apn_actions = false;
            pd.act_a.dimV = pd.b.dim;
            pd.act_b.dimV = pd.a.dim;
            pd.act_a.l = parse_matrix_list(pd.a.field, act["la"], opt, "pair.actions.la");
            pd.act_a.r = parse_matrix_list(pd.a.field, act["ra"], opt, "pair.actions.ra");
            pd.act_b.l = parse_matrix_list(pd.a.field, act["lb"], opt, "pair.actions.lb");
            pd.act_b.r = parse_matrix_list(pd.a.field, act["rb"], opt, "pair.actions.rb");
        } else {
            pd.apn_actions = true;
            pd.act1.dimV = pd.b.dim;
            pd.act2.dimV = pd.a.dim;
            pd.act1.l_succ = parse_matrix_list(pd.a.field, act["l1_succ"], opt, "pair.actions.l1_succ");
            pd.act1.r_succ = parse_matrix_list(pd.a.field, act["r1_succ"], opt, "pair.actions.r1_succ");
            pd.act1.l_prec = parse_matrix_list(pd.a.field, act["l1_prec"], opt, "pair.actions.l1_prec");
            pd.act1.r_prec = parse_matrix_list(pd.a.field, act["r1_prec"], opt, "pair.actions.r1_prec");
            pd.act2.l_succ = parse_matrix_list(pd.a.field, act["l2_succ"], opt, "pair.actions.l2_succ");
            pd.act2.r_succ = parse_matrix_list(pd.a.field, act["r2_succ"], opt, "pair.actions.r2_succ");
            pd.act2.l_prec = parse_matrix_list(pd.a.field, act["l2_prec"], opt, "pair.actions.l2_prec");
            pd.act2.r_prec = parse_matrix_list(pd.a.field, act["r2_prec"], opt, "pair.actions.r2_prec");
        }
        d.pair = pd;
    }
    return d;
}

Document load_document(const std::string& path, const LoadOptions& opt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document(ss.str(), opt);
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string save_document(const Document& d) {
    json j;
    j["field"] = json_field(d.alg.field);
    j["dim"] = d.alg.dim;
    json ops;
    if (d.alg.circ) ops["circ"] = json_op(*d.alg.circ);
    if (d.alg.succ) ops["succ"] = json_op(*d.alg.succ);
    if (d.alg.prec) ops["prec"] = json_op(*d.alg.prec);
    if (!ops.is_null()) j["ops"] = ops;
    if (d.arep) {
        j["rep"]["dimV"] = d.arep->dimV;
        j["rep"]["l_succ"] = json_matrix_list(d.arep->l_succ);
        j["rep"]["r_succ"] = json_matrix_list(d.arep->r_succ);
        j["rep"]["l_prec"] = json_matrix_list(d.arep->l_prec);
        j["rep"]["r_prec"] = json_matrix_list(d.arep->r_prec);
    } else if (d.nrep) {
        j["rep"]["dimV"] = d.nrep->dimV;
        j["rep"]["l"] = json_matrix_list(d.nrep->l);
        j["rep"]["r"] = json_matrix_list(d.nrep->r);
    }
    if (d.cobracket) {
        j["cobracket"]["d_succ"] = json_cobracket_part(d.cobracket->d_succ);
        j["cobracket"]["d_prec"] = json_cobracket_part(d.cobracket->d_prec);
    }
    if (d.omega) j["omega"] = json_sparse_matrix(*d.omega);
    if (d.s) j["s"] = json_sparse_matrix(*d.s);
    if (d.s_succ) j["s_succ"] = json_sparse_matrix(*d.s_succ);
    if (d.s_prec) j["s_prec"] = json_sparse_matrix(*d.s_prec);
    if (d.P) j["P"] = json_dense_matrix(*d.P);
    if (d.T) j["T"] = json_dense_matrix(*d.T);
    if (d.v_succ) {
        j["vops"]["succ"] = json_op(*d.v_succ);
        j["vops"]["prec"] = json_op(*d.v_prec);
    }
    if (d.x) {
        json arr = json::array();
        for (const auto& c : *d.x) arr.push_back(c.str());
        j["x"] = arr;
    }
    if (d.pair) {
        json p;
        p["a"]["field"] = json_field(d.pair->a.field);
        p["a"]["dim"] = d.pair->a.dim;
        if (d.pair->a.circ) p["a"]["ops"]["circ"] = json_op(*d.pair->a.circ);
        if (d.pair->a.succ) p["a"]["ops"]["succ"] = json_op(*d.pair->a.succ);
        if (d.pair->a.prec) p["a"]["ops"]["prec"] = json_op(*d.pair->a.prec);
        p["b"]["field"] = json_field(d.pair->b.field);
        p["b"]["dim"] = d.pair->b.dim;
        if (d.pair->b.circ) p["b"]["ops"]["circ"] = json_op(*d.pair->b.circ);
        if (d.pair->b.succ) p["b"]["ops"]["succ"] = json_op(*d.pair->b.succ);
        if (d.pair->b.prec) p["b"]["ops"]["prec"] = json_op(*d.pair->b.prec);
        if (d.pair->apn_actions) {
            p["actions"]["l1_succ"] = json_matrix_list(d.pair->act1.l_succ);
            p["actions"]["r1_succ"] = json_matrix_list(d.pair->act1.r_succ);
            p["actions"]["l1_prec"] = json_matrix_list(d.pair->act1.l_prec);
            p["actions"]["r1_prec"] = json_matrix_list(d.pair->act1.r_prec);
            p["actions"]["l2_succ"] = json_matrix_list(d.pair->act2.l_succ);
            p["actions"]["r2_succ"] = json_matrix_list(d.pair->act2.r_succ);
            p["actions"]["l2_prec"] = json_matrix_list(d.pair->act2.l_prec);
            p["actions"]["r2_prec"] = json_matrix_list(d.pair->act2.r_prec);
        } else {
            p["actions"]["la"] = json_matrix_list(d.pair->act_a.l);
            p["actions"]["ra"] = json_matrix_list(d.pair->act_a.r);
            p["actions"]["lb"] = json_matrix_list(d.pair->act_b.l);
            p["actions"]["rb"] = json_matrix_list(d.pair->act_b.r);
        }
        j["pair"] = p;
    }
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

std::string report_json(const std::string& subject, const IdentityReport& rep) {
    json j;
    j["subject"] = subject;
    j["passed"] = rep.passed;
    json ws = json::array();
    for (const auto& w : rep.witnesses) {
        json e;
        e["id"] = w.id;
        e["index"] = w.index;
        json res = json::array();
        for (const auto& c : w.residual) res.push_back(c.str());
        e["residual"] = res;
        ws.push_back(e);
    }
    j["witnesses"] = ws;
    return j.dump(2) + "\n";
}

}  // namespace apn::io
