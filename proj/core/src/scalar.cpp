#include "apn/scalar.hpp"

namespace apn {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::gf(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("GF modulus must be prime, got " + std::to_string(p));
    return FieldSpec{p};
}

std::string FieldSpec::str() const {
    return is_rational() ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::of(FieldSpec f, long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return of(f, q);
}

Scalar Scalar::of(FieldSpec f, const mpq_class& q) {
    Scalar s(f.p, q);
    s.v_.canonicalize();
    s.reduce();
    return s;
}

void Scalar::reduce() {
    if (p_ == 0) return;
    if (v_.get_den() != 1) {
        // residue = num * den^{-1} mod p
        mpz_class den_inv;
        mpz_class den = v_.get_den();
        if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
            throw std::domain_error("denominator not invertible mod " + std::to_string(p_));
        mpz_class num = v_.get_num() * den_inv;
        v_ = mpq_class(num);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
    v_ = mpq_class(r);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw FieldMismatch("scalar fields differ: " + field().str() + " vs " + o.field().str());
}

Scalar Scalar::operator-() const { return Scalar::of(field(), mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return Scalar::of(field(), mpq_class(v_ + o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return Scalar::of(field(), mpq_class(v_ - o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return Scalar::of(field(), mpq_class(v_ * o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (p_ == 0) return Scalar::of(field(), mpq_class(v_ / o.v_));
    mpz_class inv;
    mpz_class num = o.v_.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
        throw std::domain_error("residue not invertible mod " + std::to_string(p_));
    return Scalar::of(field(), mpq_class(v_.get_num() * inv));
}

Scalar Scalar::parse(FieldSpec f, const std::string& text, bool allow_gf_fraction) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("bad coefficient literal '" + text + "'");
    };
    std::string t = text;
    if (t.empty()) throw bad();
    std::string::size_type slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw bad();
        std::string::size_type i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    };
    check_int(num);
    check_int(den);
    if (slash != std::string::npos && !f.is_rational() && !allow_gf_fraction)
        throw FieldMismatch("rational literal '" + text + "' in a " + f.str() + " document");
    mpq_class q;
    if (q.set_str(num + "/" + den, 10) != 0) throw bad();
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return of(f, q);
}

std::string Scalar::str() const {
    return v_.get_str();
}

}  // namespace apn
