#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "extlab/matrix.hpp"

namespace extlab {

struct SmithOptions {
    bool left = false;           // track U
    bool left_inverse = false;   // track U^-1
    bool right = false;          // track V
    bool right_inverse = false;  // track V^-1
};

// U * A * V = D with D(i, i) = diagonal[i] for i < rank and zero elsewhere;
// the diagonal is positive and forms a divisibility chain.
template <class T>
struct SmithForm {
    std::vector<T> diagonal;
    std::size_t rank = 0;
    std::optional<Matrix<T>> U, U_inv, V, V_inv;
};

namespace detail {

template <class T>
class SmithEngine {
public:
    SmithEngine(Matrix<T> a, SmithOptions opts) : a_(std::move(a)), opts_(opts) {
        const std::size_t m = a_.rows(), n = a_.cols();
        if (opts_.left) U_ = Matrix<T>::identity(m);
        if (opts_.left_inverse) Ui_ = Matrix<T>::identity(m);
        if (opts_.right) V_ = Matrix<T>::identity(n);
        if (opts_.right_inverse) Vi_ = Matrix<T>::identity(n);
    }

    SmithForm<T> run() {
        diagonalize();
        make_chain();
        SmithForm<T> out;
        out.rank = rank_;
        for (std::size_t i = 0; i < rank_; ++i) out.diagonal.push_back(a_(i, i));
        if (opts_.left) out.U = std::move(U_);
        if (opts_.left_inverse) out.U_inv = std::move(Ui_);
        if (opts_.right) out.V = std::move(V_);
        if (opts_.right_inverse) out.V_inv = std::move(Vi_);
        return out;
    }

private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        a_.swap_rows(i, j);
        if (opts_.left) U_.swap_rows(i, j);
        if (opts_.left_inverse) Ui_.swap_cols(i, j);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        a_.swap_cols(i, j);
        if (opts_.right) V_.swap_cols(i, j);
        if (opts_.right_inverse) Vi_.swap_rows(i, j);
    }

    // row[i] -= q * row[t], restricted to the live columns of row t.
    void row_reduce(std::size_t i, std::size_t t, const T& q, const std::vector<std::size_t>& live) {
        for (std::size_t j : live) a_(i, j) -= q * a_(t, j);
        if (opts_.left) U_.add_row_multiple(i, t, -q);
        if (opts_.left_inverse) Ui_.add_col_multiple(t, i, q);
    }

    // col[j] -= q * col[t], restricted to the live rows of column t.
    void col_reduce(std::size_t j, std::size_t t, const T& q, const std::vector<std::size_t>& live) {
        for (std::size_t i : live) a_(i, j) -= q * a_(i, t);
        if (opts_.right) V_.add_col_multiple(j, t, -q);
        if (opts_.right_inverse) Vi_.add_row_multiple(t, j, q);
    }

    bool find_pivot(std::size_t t) {
        const std::size_t m = a_.rows(), n = a_.cols();
        std::size_t bi = m, bj = n;
        T best(0);
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                const T& x = a_(i, j);
                if (x == T(0)) continue;
                T mag = abs_value(x);
                if (bi == m || mag < best) {
                    best = mag;
                    bi = i;
                    bj = j;
                    if (best == T(1)) goto found;
                }
            }
        }
        if (bi == m) return false;
    found:
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void diagonalize() {
        const std::size_t m = a_.rows(), n = a_.cols();
        std::size_t t = 0;
        for (; t < m && t < n; ++t) {
            if (!find_pivot(t)) break;
            for (;;) {
                bool dirty = false;
                std::vector<std::size_t> live;
                for (std::size_t j = t; j < n; ++j)
                    if (a_(t, j) != T(0)) live.push_back(j);
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a_(i, t) == T(0)) continue;
                    T q = a_(i, t) / a_(t, t);
                    row_reduce(i, t, q, live);
                    if (a_(i, t) != T(0)) dirty = true;
                }
                live.clear();
                for (std::size_t i = t; i < m; ++i)
                    if (a_(i, t) != T(0)) live.push_back(i);
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a_(t, j) == T(0)) continue;
                    T q = a_(t, j) / a_(t, t);
                    col_reduce(j, t, q, live);
                    if (a_(t, j) != T(0)) dirty = true;
                }
                if (!dirty) break;
                // A remainder smaller than the pivot survived; promote it.
                T best = abs_value(a_(t, t));
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a_(i, t) != T(0) && abs_value(a_(i, t)) < best) {
                        best = abs_value(a_(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a_(t, j) != T(0) && abs_value(a_(t, j)) < best) {
                        best = abs_value(a_(t, j));
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
            }
            if (a_(t, t) < T(0)) {
                a_.negate_row(t);
                if (opts_.left) U_.negate_row(t);
                if (opts_.left_inverse) Ui_.negate_col(t);
            }
        }
        rank_ = t;
    }

    void make_chain() {
        for (std::size_t i = 0; i < rank_; ++i) {
            for (std::size_t j = i + 1; j < rank_; ++j) {
                T a = a_(i, i), b = a_(j, j);
                if (b % a == T(0)) continue;
                T s, u;
                T g = extended_gcd(a, b, s, u);
                T ag = a / g, bg = b / g;
                a_(i, i) = g;
                a_(j, j) = ag * b;
                if (opts_.left) U_.transform_rows(i, j, s, u, -bg, ag);
                if (opts_.left_inverse) Ui_.transform_cols(i, j, ag, -u, bg, s);
                if (opts_.right) V_.transform_cols(i, j, T(1), -u * bg, T(1), s * ag);
                if (opts_.right_inverse) Vi_.transform_rows(i, j, s * ag, u * bg, T(-1), T(1));
            }
        }
    }

    Matrix<T> a_;
    SmithOptions opts_;
    Matrix<T> U_, Ui_, V_, Vi_;
    std::size_t rank_ = 0;
};

} // namespace detail

template <class T>
SmithForm<T> smith_normal_form(Matrix<T> a, SmithOptions opts = {}) {
    return detail::SmithEngine<T>(std::move(a), opts).run();
}

// Fast path in checked 64-bit arithmetic, falling back to arbitrary precision
// when any intermediate overflows. The result is always exact.
inline SmithForm<Integer> smith_normal_form_exact(const Matrix<Integer>& a, SmithOptions opts = {}) {
    try {
        auto fast = smith_normal_form(convert_matrix<Checked64>(a), opts);
        SmithForm<Integer> out;
        out.rank = fast.rank;
        for (auto& d : fast.diagonal) out.diagonal.push_back(to_integer(d));
        if (fast.U) out.U = convert_matrix<Integer>(*fast.U);
        if (fast.U_inv) out.U_inv = convert_matrix<Integer>(*fast.U_inv);
        if (fast.V) out.V = convert_matrix<Integer>(*fast.V);
        if (fast.V_inv) out.V_inv = convert_matrix<Integer>(*fast.V_inv);
        return out;
    } catch (const ArithmeticOverflow&) {
        return smith_normal_form(a, opts);
    }
}

} // namespace extlab
