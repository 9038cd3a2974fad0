#pragma once

#include "kronjord/field.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kronjord {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over an exact field. Zero-sized dimensions are legal
/// (a 3x0 matrix is the map from the zero space).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field<T> field = Field<T>{})
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(std::size_t n, Field<T> field = Field<T>{}) {
        Matrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Integer literal matrix, mainly for tests and fixed constructions.
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows, Field<T> field = Field<T>{}) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(r, c, field);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
            std::size_t j = 0;
            for (long v : row) m(i, j++) = field.from_int(v);
            ++i;
        }
        return m;
    }

    static Matrix column(const Vector<T>& v, Field<T> field = Field<T>{}) {
        Matrix m(v.size(), 1, field);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field<T>& field() const { return field_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
        return (*this)(i, j);
    }
    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
        return (*this)(i, j);
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("sub-block out of range");
        Matrix b(nr, nc, field_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block does not fit");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Vector<T> column_vector(std::size_t j) const {
        Vector<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    Vector<T> apply(const Vector<T>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        Vector<T> y(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("product of " + a.shape() + " and " + b.shape());
        }
        Matrix c(a.rows_, b.cols_, a.field_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j).to_string();
            os << ']';
        }
        return os << ']';
    }

private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch " + shape() + " vs " + o.shape());
    }

    [[no_unique_address]] Field<T> field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <class T>
struct RowEchelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Among the candidate pivots of a column the entry
/// with the smallest bit size is chosen, which keeps rational growth in check.
template <class T>
RowEchelon<T> row_reduce(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t prow = 0;
    for (std::size_t j = 0; j < cols && prow < rows; ++j) {
        std::size_t best = rows;
        std::size_t best_size = 0;
        for (std::size_t i = prow; i < rows; ++i) {
            const T& x = m(i, j);
            if (x.is_zero()) continue;
            const std::size_t sz = x.bit_size();
            if (best == rows || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == rows) continue;
        if (best != prow)
            for (std::size_t k = j; k < cols; ++k) std::swap(m(best, k), m(prow, k));

        const T inv = m(prow, j).inverse();
        support.clear();
        for (std::size_t k = j; k < cols; ++k) {
            if (m(prow, k).is_zero()) continue;
            m(prow, k) *= inv;
            support.push_back(k);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == prow || m(i, j).is_zero()) continue;
            const T factor = m(i, j);
            for (std::size_t k : support) m(i, k) -= factor * m(prow, k);
        }
        pivots.push_back(j);
        ++prow;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return row_reduce(m).rank();
}

/// Basis of the right null space {v : m v = 0}, one vector per free column.
/// Empty iff m has full column rank.
template <class T>
std::vector<Vector<T>> kernel_basis(const Matrix<T>& m) {
    const auto field = m.field();
    const std::size_t cols = m.cols();
    std::vector<Vector<T>> basis;
    if (cols == 0) return basis;
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < cols; ++j) {
            Vector<T> v(cols, field.zero());
            v[j] = field.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector<T> v(cols, field.zero());
        v[free] = field.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rows spanning the left null space {p : p m = 0}. As a matrix this is a
/// surjection onto the cokernel of m whose kernel is exactly im(m).
template <class T>
Matrix<T> cokernel_projection(const Matrix<T>& m) {
    const auto left = kernel_basis(m.transpose());
    Matrix<T> p(left.size(), m.rows(), m.field());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) p(i, j) = left[i][j];
    return p;
}

/// One solution of a x = b, or nullopt if the system is inconsistent.
template <class T>
std::optional<Vector<T>> solve_linear_system(const Matrix<T>& a, const Vector<T>& b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                    " but matrix is " + a.shape());
    }
    const auto field = a.field();
    Matrix<T> aug(a.rows(), a.cols() + 1, field);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
    const auto ech = row_reduce(aug);
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
    Vector<T> x(a.cols(), field.zero());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
    return x;
}

/// Assembles a grid of blocks. Blocks in one grid row must agree on row count,
/// blocks in one grid column on column count.
template <class T>
Matrix<T> block_matrix(const std::vector<std::vector<Matrix<T>>>& grid) {
    if (grid.empty()) return Matrix<T>();
    const std::size_t ncols = grid.front().size();
    for (const auto& row : grid)
        if (row.size() != ncols) throw std::invalid_argument("block grid is ragged");
    if (ncols == 0) return Matrix<T>();

    std::vector<std::size_t> heights, widths;
    for (const auto& row : grid) {
        const std::size_t h = row.front().rows();
        for (const auto& blk : row)
            if (blk.rows() != h) throw std::invalid_argument("blocks in a grid row disagree on row count");
        heights.push_back(h);
    }
    for (std::size_t j = 0; j < ncols; ++j) {
        const std::size_t w = grid.front()[j].cols();
        for (const auto& row : grid)
            if (row[j].cols() != w) throw std::invalid_argument("blocks in a grid column disagree on column count");
        widths.push_back(w);
    }
    std::size_t total_rows = 0, total_cols = 0;
    for (auto h : heights) total_rows += h;
    for (auto w : widths) total_cols += w;

    Matrix<T> out(total_rows, total_cols, grid.front().front().field());
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < ncols; ++j) {
            out.set_block(r0, c0, grid[i][j]);
            c0 += widths[j];
        }
        r0 += heights[i];
    }
    return out;
}

/// Stacks matrices with equal column counts on top of each other.
template <class T>
Matrix<T> vstack(const std::vector<Matrix<T>>& parts, std::size_t cols, Field<T> field = Field<T>{}) {
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
        rows += p.rows();
    }
    Matrix<T> out(rows, cols, field);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
        out.set_block(r0, 0, p);
        r0 += p.rows();
    }
    return out;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

}  // namespace kronjord
