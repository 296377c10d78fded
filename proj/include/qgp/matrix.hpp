#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qgp/errors.hpp"
#include "qgp/field.hpp"

namespace qgp {

/// Dense matrix over an exact field. Row-major; all operations exact.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionMismatch("from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const F& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    Matrix scaled(const F& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<F> col(std::size_t j) const {
        std::vector<F> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const std::vector<F>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row count");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column count");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    /// Kronecker product, vec(AXB) = (B^T (x) A) vec(X) with column-stacking vec.
    static Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> data_;
};

/// Column-stacking vectorization helpers (vec stacks columns top to bottom).
template <class F>
std::vector<F> vec(const Matrix<F>& m) {
    std::vector<F> v(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v[j * m.rows() + i] = m(i, j);
    return v;
}

template <class F>
Matrix<F> unvec(const std::vector<F>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("unvec size");
    Matrix<F> m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
    return m;
}

/// In-place reduced row echelon form; returns pivot column indices.
/// Pivoting is exact: first nonzero entry in scan order.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        F inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            F c = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= c * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    Matrix<F> w = m;
    return rref(w).size();
}

/// Columns form a basis of { v : m v = 0 }.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
    Matrix<F> w = m;
    auto pivots = rref(w);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    Matrix<F> basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis(fc, k) = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -w(r, fc);
    }
    return basis;
}

/// Some x with m x = b (columnwise), or nullopt when inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& b) {
    if (m.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    Matrix<F> aug = Matrix<F>::hstack(m, b);
    auto pivots = rref(aug);
    Matrix<F> x(m.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= m.cols()) return std::nullopt;  // pivot in the rhs block
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, m.cols() + j);
    }
    return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse: not square");
    auto x = solve(m, Matrix<F>::identity(m.rows()));
    if (!x || rank(m) != m.rows()) throw Error("inverse: singular matrix");
    return *x;
}

/// Projection/lift pair presenting the quotient of an ambient space by the
/// column span of `subspace`: projection*lift = id on the quotient and
/// ker(projection) = span(subspace).
template <class F>
std::pair<Matrix<F>, Matrix<F>> quotient_basis(std::size_t ambient_dim, const Matrix<F>& subspace) {
    if (subspace.cols() > 0 && subspace.rows() != ambient_dim)
        throw DimensionMismatch("quotient_basis: subspace not in ambient space");
    // Echelonize the subspace transpose to find pivot coordinates.
    Matrix<F> w = subspace.transpose();
    auto pivots = rref(w);
    std::vector<std::size_t> complement;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < ambient_dim; ++c) {
            if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
            complement.push_back(c);
        }
    }
    std::size_t q = complement.size();
    // Basis change B = [subspace basis | unit vectors at complement coords];
    // projection = last q rows of B^{-1}, lift = the unit-vector block.
    Matrix<F> b(ambient_dim, ambient_dim);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c) b(c, r) = w(r, c);
    Matrix<F> lift(ambient_dim, q);
    for (std::size_t k = 0; k < q; ++k) {
        lift(complement[k], k) = F(1);
        for (std::size_t c = 0; c < ambient_dim; ++c) b(c, pivots.size() + k) = lift(c, k);
    }
    Matrix<F> binv = inverse(b);
    Matrix<F> projection(q, ambient_dim);
    for (std::size_t k = 0; k < q; ++k)
        for (std::size_t c = 0; c < ambient_dim; ++c) projection(k, c) = binv(pivots.size() + k, c);
    return {projection, lift};
}

/// Column-space basis as a matrix whose columns are independent generators.
template <class F>
Matrix<F> column_basis(const Matrix<F>& m) {
    Matrix<F> w = m;
    auto pivots = rref(w);
    Matrix<F> r(m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) r.set_col(k, m.col(pivots[k]));
    return r;
}

}  // namespace qgp
