#pragma once

#include <optional>
#include <vector>

#include "apn/scalar.hpp"

namespace apn {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n, FieldSpec f);
Vec basis_vec(int n, int i, FieldSpec f);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

// Dense matrix over one FieldSpec, column-vector convention: (M v)_i = sum_j M(i,j) v_j.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, FieldSpec f);
    static Matrix identity(int n, FieldSpec f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldSpec field() const { return field_; }

    Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Vec apply(const Vec& v) const;

    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

private:
    int rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> e_;
};

// Solves Mx = b by fraction-free (Bareiss) elimination with first-nonzero
// pivoting; free variables are set to zero, so the output is deterministic.
// Returns nothing when the system is inconsistent. The solution is re-checked
// against Mx = b before returning.
std::optional<Vec> solve_linear(const Matrix& M, const Vec& b);

// Exact inverse; nullopt when singular. Throws on non-square input.
std::optional<Matrix> invert(const Matrix& M);

Scalar determinant(const Matrix& M);

// tau(x (x) y) = y (x) x on A (x) A stored as a square matrix: the transpose.
Matrix tau2(const Matrix& s);

}  // namespace apn
