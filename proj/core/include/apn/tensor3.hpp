#pragma once

#include <array>

#include "apn/linalg.hpp"

namespace apn {

// Dense order-3 tensor; houses structure constants and elements of A (x) A (x) A.
class Tensor3 {
public:
    Tensor3() : n1_(0), n2_(0), n3_(0) {}
    Tensor3(int n1, int n2, int n3, FieldSpec f);

    int dim1() const { return n1_; }
    int dim2() const { return n2_; }
    int dim3() const { return n3_; }
    FieldSpec field() const { return field_; }

    Scalar& at(int i, int j, int k) {
        return e_[(static_cast<size_t>(i) * n2_ + j) * n3_ + k];
    }
    const Scalar& at(int i, int j, int k) const {
        return e_[(static_cast<size_t>(i) * n2_ + j) * n3_ + k];
    }

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 operator-() const;
    Tensor3 scaled(const Scalar& c) const;

    bool operator==(const Tensor3& o) const;
    bool is_zero() const;

private:
    int n1_, n2_, n3_;
    FieldSpec field_;
    std::vector<Scalar> e_;
};

// Permutation of the three tensor legs; to[k] is the destination slot of leg k.
struct Perm3 {
    std::array<int, 3> to{0, 1, 2};

    static Perm3 identity() { return {{0, 1, 2}}; }
    static Perm3 swap12() { return {{1, 0, 2}}; }   // x(x)y(x)z -> y(x)x(x)z
    static Perm3 swap13() { return {{2, 1, 0}}; }   // x(x)y(x)z -> z(x)y(x)x
    static Perm3 swap23() { return {{0, 2, 1}}; }   // x(x)y(x)z -> x(x)z(x)y
    static Perm3 cycle132() { return {{1, 2, 0}}; } // x(x)y(x)z -> z(x)x(x)y

    bool valid() const;
    Perm3 after(const Perm3& rho) const;  // apply rho first, then this
    Perm3 inverse() const;
    bool operator==(const Perm3&) const = default;
};

Tensor3 permute3(const Tensor3& t, const Perm3& sigma);

}  // namespace apn
