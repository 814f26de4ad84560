#pragma once

#include "apn/tensor3.hpp"

namespace apn {

// Bilinear operation on an n-dimensional space by structure constants:
// e_i * e_j = sum_k c(i,j,k) e_k.
struct BinaryOp {
    int dim = 0;
    Tensor3 c;

    BinaryOp() = default;
    BinaryOp(int dim, FieldSpec f) : dim(dim), c(dim, dim, dim, f) {}
    static BinaryOp zero(int dim, FieldSpec f) { return BinaryOp(dim, f); }

    FieldSpec field() const { return c.field(); }

    Vec mul_basis(int i, int j) const;
    Vec mul(const Vec& x, const Vec& y) const;

    // Matrix of z -> e_i * z.
    Matrix left(int i) const;
    // Matrix of z -> z * e_i.
    Matrix right(int i) const;
    Matrix left_of(const Vec& x) const;
    Matrix right_of(const Vec& x) const;

    // Structure constants of (x,y) -> y * x.
    BinaryOp flipped() const;

    BinaryOp operator+(const BinaryOp& o) const;
    BinaryOp operator-(const BinaryOp& o) const;
    bool operator==(const BinaryOp& o) const { return dim == o.dim && c == o.c; }
    bool is_zero() const { return c.is_zero(); }
};

// x (.) y = x>y + y<x and x (*) y = x o y + y o x, built entrywise.
BinaryOp op_sum(const BinaryOp& a, const BinaryOp& b);

}  // namespace apn
