#include "apn/tensor3.hpp"

#include <stdexcept>

namespace apn {

Tensor3::Tensor3(int n1, int n2, int n3, FieldSpec f)
    : n1_(n1), n2_(n2), n3_(n3), field_(f),
      e_(static_cast<size_t>(n1) * n2 * n3, Scalar::zero(f)) {
    if (n1 < 0 || n2 < 0 || n3 < 0) throw std::invalid_argument("negative tensor dimension");
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    if (n1_ != o.n1_ || n2_ != o.n2_ || n3_ != o.n3_)
        throw std::invalid_argument("tensor shape mismatch");
    Tensor3 r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    if (n1_ != o.n1_ || n2_ != o.n2_ || n3_ != o.n3_)
        throw std::invalid_argument("tensor shape mismatch");
    Tensor3 r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Tensor3 Tensor3::scaled(const Scalar& c) const {
    Tensor3 r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

bool Tensor3::operator==(const Tensor3& o) const {
    return n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_ && field_ == o.field_ && e_ == o.e_;
}

bool Tensor3::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Perm3::valid() const {
    bool seen[3] = {false, false, false};
    for (int k : to) {
        if (k < 0 || k > 2 || seen[k]) return false;
        seen[k] = true;
    }
    return true;
}

Perm3 Perm3::after(const Perm3& rho) const {
    Perm3 r;
    for (int k = 0; k < 3; ++k) r.to[static_cast<size_t>(k)] = to[static_cast<size_t>(rho.to[static_cast<size_t>(k)])];
    return r;
}

Perm3 Perm3::inverse() const {
    Perm3 r;
    for (int k = 0; k < 3; ++k) r.to[static_cast<size_t>(to[static_cast<size_t>(k)])] = k;
    return r;
}

Tensor3 permute3(const Tensor3& t, const Perm3& sigma) {
    if (!sigma.valid()) throw std::invalid_argument("invalid leg permutation");
    int dims[3] = {t.dim1(), t.dim2(), t.dim3()};
    int out[3];
    for (int k = 0; k < 3; ++k) out[sigma.to[static_cast<size_t>(k)]] = dims[k];
    Tensor3 r(out[0], out[1], out[2], t.field());
    int idx[3];
    for (idx[0] = 0; idx[0] < dims[0]; ++idx[0])
        for (idx[1] = 0; idx[1] < dims[1]; ++idx[1])
            for (idx[2] = 0; idx[2] < dims[2]; ++idx[2]) {
                int j[3];
                for (int k = 0; k < 3; ++k) j[sigma.to[static_cast<size_t>(k)]] = idx[k];
                r.at(j[0], j[1], j[2]) = t.at(idx[0], idx[1], idx[2]);
            }
    return r;
}

}  // namespace apn
