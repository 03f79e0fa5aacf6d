#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "extlab/integer.hpp"

namespace extlab {

// Dense row-major matrix over an integer-like type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
        if (factor == T(0)) return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != T(0)) (*this)(dst, j) += factor * (*this)(src, j);
    }

    // col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
        if (factor == T(0)) return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != T(0)) (*this)(i, dst) += factor * (*this)(i, src);
    }

    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

    void negate_col(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
    }

    // Rows (a, b) <- [[p, q], [r, s]] * rows (a, b).
    void transform_rows(std::size_t a, std::size_t b, const T& p, const T& q, const T& r, const T& s) {
        for (std::size_t j = 0; j < cols_; ++j) {
            T x = (*this)(a, j), y = (*this)(b, j);
            (*this)(a, j) = p * x + q * y;
            (*this)(b, j) = r * x + s * y;
        }
    }

    // Cols (a, b) <- cols (a, b) * [[p, q], [r, s]].
    void transform_cols(std::size_t a, std::size_t b, const T& p, const T& q, const T& r, const T& s) {
        for (std::size_t i = 0; i < rows_; ++i) {
            T x = (*this)(i, a), y = (*this)(i, b);
            (*this)(i, a) = x * p + y * r;
            (*this)(i, b) = x * q + y * s;
        }
    }

    std::vector<T> multiply(std::span<const T> v) const {
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != T(0) && v[j] != T(0)) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& x = a(i, k);
            if (x == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != T(0)) out(i, j) += x * b(k, j);
        }
    return out;
}

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = from_integer<To>(to_integer(m(i, j)));
    return out;
}

} // namespace extlab
