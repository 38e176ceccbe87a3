#pragma once

#include "nervetower/integers.hpp"

#include <cstddef>
#include <vector>

namespace nervetower {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Zero-size matrices (0 rows and/or 0 cols) are legal everywhere.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw ValidationError("IntMatrix: entry count does not match shape");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static IntMatrix column(const std::vector<Int>& v) {
        return IntMatrix(v.size(), 1, v);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return entries_; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw ValidationError("IntMatrix: shape mismatch in product");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (o(k, j) != 0) p(i, j) += a * o(k, j);
            }
        return p;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ValidationError("IntMatrix: shape mismatch in difference");
        IntMatrix d(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) d.entries_[k] = entries_[k] - o.entries_[k];
        return d;
    }

    std::vector<Int> operator*(const std::vector<Int>& v) const {
        if (cols_ != v.size()) throw ValidationError("IntMatrix: shape mismatch in matvec");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_col(std::size_t j, const std::vector<Int>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    /// Horizontal concatenation [A | B]; row counts must agree.
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_) throw ValidationError("IntMatrix: hstack row mismatch");
        IntMatrix m(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
        }
        return m;
    }

    /// Keep columns whose index is in [from, to).
    IntMatrix col_slice(std::size_t from, std::size_t to) const {
        IntMatrix m(rows_, to - from);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = from; j < to; ++j) m(i, j - from) = (*this)(i, j);
        return m;
    }
    IntMatrix row_slice(std::size_t from, std::size_t to) const {
        IntMatrix m(to - from, cols_);
        for (std::size_t i = from; i < to; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i - from, j) = (*this)(i, j);
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[a] += c * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(b, j) != 0) (*this)(a, j) += c * (*this)(b, j);
    }
    // col[a] += c * col[b]
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, b) != 0) (*this)(i, a) += c * (*this)(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }
    void negate_col(std::size_t a) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

} // namespace nervetower
