#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace apn {

// Coefficient domain: the rationals (p == 0) or the prime field GF(p).
struct FieldSpec {
    unsigned p = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec gf(unsigned p);

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact field element. Rational values are kept canonical (gcd(num,den)=1,
// den>0); prime-field values are integer residues in [0,p).
class Scalar {
public:
    Scalar() = default;  // rational zero

    static Scalar zero(FieldSpec f) { return of(f, 0); }
    static Scalar one(FieldSpec f) { return of(f, 1); }
    static Scalar of(FieldSpec f, long num, long den = 1);
    static Scalar of(FieldSpec f, const mpq_class& q);
    // Accepts "n" and "n/d" with optional sign. Fractions in a prime-field
    // document are rejected unless allow_gf_fraction is set (then coerced via
    // the modular inverse of the denominator).
    static Scalar parse(FieldSpec f, const std::string& text,
                        bool allow_gf_fraction = false);

    FieldSpec field() const { return FieldSpec{p_}; }
    bool is_zero() const { return v_ == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const { return one(field()) / *this; }

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "num" or "num/den" for rationals, the residue for GF(p).
    std::string str() const;

    const mpq_class& value() const { return v_; }

private:
    Scalar(unsigned p, mpq_class v) : v_(std::move(v)), p_(p) {}
    void reduce();
    void check_same_field(const Scalar& o) const;

    mpq_class v_;
    unsigned p_ = 0;
};

}  // namespace apn
