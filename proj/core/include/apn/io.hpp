#pragma once

#include <map>
#include <optional>
#include <string>

#include "apn/bialgebra.hpp"
#include "apn/search.hpp"

namespace apn::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named rational parameters substituted into coefficient literals; a
// coefficient may be "a", "-a" or "<rational>*a".
using Params = std::map<std::string, std::string>;

struct LoadOptions {
    Params params;
    bool gf_coerce = false;  // allow "n/d" literals in prime-field documents
};

struct AlgebraDoc {
    FieldSpec field;
    int dim = 0;
    std::optional<BinaryOp> circ;
    std::optional<BinaryOp> succ;
    std::optional<BinaryOp> prec;

    bool has_apn() const { return succ.has_value() && prec.has_value(); }
    bool has_novikov() const { return circ.has_value(); }
    APNAlgebra apn() const;
    NovikovAlgebra novikov() const;
};

struct PairDoc {
    AlgebraDoc a, b;
    bool apn_actions = false;
    NovikovRep act_a, act_b;  // Novikov actions
    APNRep act1, act2;        // APN actions
    NovikovMatchedPair novikov_pair() const;
    APNMatchedPair apn_pair() const;
};

// One fixture file; the present parts decide what a command can do with it.
struct Document {
    AlgebraDoc alg;
    std::optional<NovikovRep> nrep;
    std::optional<APNRep> arep;
    std::optional<Cobracket> cobracket;
    std::optional<Matrix> omega;
    std::optional<Matrix> s;
    std::optional<Matrix> s_succ;
    std::optional<Matrix> s_prec;
    std::optional<Matrix> P;
    std::optional<Matrix> T;
    std::optional<BinaryOp> v_succ;
    std::optional<BinaryOp> v_prec;
    std::optional<Vec> x;
    std::optional<PairDoc> pair;
};

Document parse_document(const std::string& json_text, const LoadOptions& opt = {});
Document load_document(const std::string& path, const LoadOptions& opt = {});

// Canonical JSON text: sparse sorted entries, object keys sorted, exact
// coefficient strings. load(save(d)) reproduces d.
std::string save_document(const Document& d);
void write_file(const std::string& path, const std::string& text);

// Stable JSON rendering of a check outcome (used for reports and --json-out).
std::string report_json(const std::string& subject, const IdentityReport& rep);

}  // namespace apn::io
