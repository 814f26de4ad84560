#include "apn/op.hpp"

#include <stdexcept>

namespace apn {

Vec BinaryOp::mul_basis(int i, int j) const {
    Vec r = zero_vec(dim, field());
    for (int k = 0; k < dim; ++k) r[static_cast<size_t>(k)] = c.at(i, j, k);
    return r;
}

Vec BinaryOp::mul(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw std::invalid_argument("operand dimension mismatch");
    Vec r = zero_vec(dim, field());
    for (int i = 0; i < dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            const Scalar cij = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            if (cij.is_zero()) continue;
            for (int k = 0; k < dim; ++k) r[static_cast<size_t>(k)] += cij * c.at(i, j, k);
        }
    }
    return r;
}

Matrix BinaryOp::left(int i) const {
    Matrix m(dim, dim, field());
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, j) = c.at(i, j, k);
    return m;
}

Matrix BinaryOp::right(int i) const {
    Matrix m(dim, dim, field());
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, j) = c.at(j, i, k);
    return m;
}

Matrix BinaryOp::left_of(const Vec& x) const {
    Matrix m(dim, dim, field());
    for (int i = 0; i < dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        m = m + left(i).scaled(x[static_cast<size_t>(i)]);
    }
    return m;
}

Matrix BinaryOp::right_of(const Vec& x) const {
    Matrix m(dim, dim, field());
    for (int i = 0; i < dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        m = m + right(i).scaled(x[static_cast<size_t>(i)]);
    }
    return m;
}

BinaryOp BinaryOp::flipped() const {
    BinaryOp r(dim, field());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) r.c.at(i, j, k) = c.at(j, i, k);
    return r;
}

BinaryOp BinaryOp::operator+(const BinaryOp& o) const {
    if (dim != o.dim) throw std::invalid_argument("operation dimension mismatch");
    BinaryOp r = *this;
    r.c = c + o.c;
    return r;
}

BinaryOp BinaryOp::operator-(const BinaryOp& o) const {
    if (dim != o.dim) throw std::invalid_argument("operation dimension mismatch");
    BinaryOp r = *this;
    r.c = c - o.c;
    return r;
}

BinaryOp op_sum(const BinaryOp& a, const BinaryOp& b) { return a + b; }

}  // namespace apn
