#include "apn/linalg.hpp"

#include <stdexcept>

namespace apn {

Vec zero_vec(int n, FieldSpec f) { return Vec(static_cast<size_t>(n), Scalar::zero(f)); }

Vec basis_vec(int n, int i, FieldSpec f) {
    Vec v = zero_vec(n, f);
    v[static_cast<size_t>(i)] = Scalar::one(f);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("vector size mismatch");
    Scalar s = Scalar::zero(a[0].field());
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(int rows, int cols, FieldSpec f)
    : rows_(rows), cols_(cols), field_(f),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n, FieldSpec f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    Vec r = zero_vec(rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

struct Echelon {
    Matrix m;                               // reduced augmented matrix
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    int sign = 1;
};

// Bareiss fraction-free elimination over the augmented matrix. First-nonzero
// pivot in row order; divisions by the previous pivot are exact.
Echelon eliminate(Matrix m) {
    Echelon e{std::move(m), {}, 1};
    Matrix& a = e.m;
    const FieldSpec f = a.field();
    Scalar prev = Scalar::one(f);
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
            e.sign = -e.sign;
        }
        const Scalar p = a.at(row, col);
        for (int i = row + 1; i < a.rows(); ++i) {
            const Scalar q = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j)
                a.at(i, j) = (a.at(i, j) * p - q * a.at(row, j)) / prev;
        }
        e.pivots.emplace_back(row, col);
        prev = p;
        ++row;
    }
    return e;
}

}  // namespace

std::optional<Vec> solve_linear(const Matrix& M, const Vec& b) {
    if (static_cast<int>(b.size()) != M.rows())
        throw std::invalid_argument("rhs length does not match row count");
    const FieldSpec f = M.field();
    Matrix aug(M.rows(), M.cols() + 1, f);
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols()) = b[static_cast<size_t>(i)];
    }
    Echelon e = eliminate(std::move(aug));
    // A pivot in the rhs column means an inconsistent row.
    for (const auto& [r, c] : e.pivots)
        if (c == M.cols()) return std::nullopt;
    Vec x = zero_vec(M.cols(), f);
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        const auto [r, c] = *it;
        Scalar s = e.m.at(r, M.cols());
        for (int j = c + 1; j < M.cols(); ++j) s -= e.m.at(r, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(c)] = s / e.m.at(r, c);
    }
    if (M.apply(x) != b) throw std::logic_error("solve_linear failed back-substitution check");
    return x;
}

std::optional<Matrix> invert(const Matrix& M) {
    if (!M.is_square()) throw std::invalid_argument("invert expects a square matrix");
    const int n = M.rows();
    const FieldSpec f = M.field();
    Matrix a = M;
    Matrix inv = Matrix::identity(n, f);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const Scalar d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) / d;
            inv.at(col, j) = inv.at(col, j) / d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const Scalar q = a.at(i, col);
            if (q.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= q * a.at(col, j);
                inv.at(i, j) -= q * inv.at(col, j);
            }
        }
    }
    if (!(M * inv == Matrix::identity(n, f))) throw std::logic_error("invert failed product check");
    return inv;
}

Scalar determinant(const Matrix& M) {
    if (!M.is_square()) throw std::invalid_argument("determinant expects a square matrix");
    if (M.rows() == 0) return Scalar::one(M.field());
    Echelon e = eliminate(M);
    if (static_cast<int>(e.pivots.size()) < M.rows()) return Scalar::zero(M.field());
    // Bareiss keeps the trailing pivot equal to the determinant up to the swap sign.
    Scalar d = e.m.at(M.rows() - 1, M.cols() - 1);
    return e.sign < 0 ? -d : d;
}

Matrix tau2(const Matrix& s) {
    if (!s.is_square()) throw std::invalid_argument("tau2 expects a square matrix");
    return s.transpose();
}

}  // namespace apn
