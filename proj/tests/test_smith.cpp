#include <gtest/gtest.h>

#include <random>

#include "extlab/smith.hpp"

using namespace extlab;

namespace {

Integer det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        out += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
    }
    return out;
}

// gcd of all k x k minors; d_k = D_k / D_{k-1}.
std::vector<Integer> determinantal_divisors(const Matrix<Integer>& A) {
    std::vector<Integer> out;
    const std::size_t r = A.rows(), c = A.cols();
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        Integer g = 0;
        std::vector<std::size_t> rs(k), cs(k);
        std::function<void(std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
            if (i == k) return pick_cols(0, 0);
            for (std::size_t x = from; x < r; ++x) {
                rs[i] = x;
                pick_rows(i + 1, x + 1);
            }
        };
        pick_cols = [&](std::size_t i, std::size_t from) {
            if (i == k) {
                std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) m[a][b] = A(rs[a], cs[b]);
                g = gcd_value(g, det(m));
                return;
            }
            for (std::size_t x = from; x < c; ++x) {
                cs[i] = x;
                pick_cols(i + 1, x + 1);
            }
        };
        pick_rows(0, 0);
        out.push_back(g);
    }
    return out;
}

Matrix<Integer> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    Matrix<Integer> A(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) A(i, j) = d(rng);
    return A;
}

} // namespace

TEST(Smith, KnownDiagonal) {
    Matrix<Integer> A(3, 3);
    int v[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = v[i][j];
    auto s = smith_normal_form_exact(A, {true, true, true, true});
    ASSERT_EQ(s.rank, 3u);
    EXPECT_EQ(s.diagonal[0], 2);
    EXPECT_EQ(s.diagonal[1], 6);
    EXPECT_EQ(s.diagonal[2], 12);
}

TEST(Smith, TransformsAndDivisorsOnRandomMatrices) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        auto A = random_matrix(rng, r, c, t % 2 ? 3 : 9);
        auto s = smith_normal_form_exact(A, {true, true, true, true});
        Matrix<Integer> D(r, c);
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) D(i, i) = s.diagonal[i];
        EXPECT_TRUE(*s.U * A * *s.V == D);
        EXPECT_TRUE(*s.U * *s.U_inv == Matrix<Integer>::identity(r));
        EXPECT_TRUE(*s.V * *s.V_inv == Matrix<Integer>::identity(c));
        for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
        auto dd = determinantal_divisors(A);
        Integer prev = 1;
        for (std::size_t k = 0; k < dd.size(); ++k) {
            Integer expect = dd[k] == 0 ? Integer(0) : dd[k] / prev;
            Integer got = k < s.rank ? s.diagonal[k] : Integer(0);
            EXPECT_EQ(got, expect);
            if (dd[k] != 0) prev = dd[k];
        }
    }
}

TEST(Smith, ZeroAndEmpty) {
    Matrix<Integer> Z(2, 3);
    EXPECT_EQ(smith_normal_form_exact(Z).rank, 0u);
    Matrix<Integer> E(0, 3);
    EXPECT_EQ(smith_normal_form_exact(E).rank, 0u);
}

TEST(Smith, FallsBackPastInt64) {
    Matrix<Integer> A(2, 2);
    A(0, 0) = Integer("4000000000000000000");
    A(0, 1) = Integer("3000000000000000001");
    A(1, 0) = Integer("5000000000000000003");
    A(1, 1) = Integer("7000000000000000007");
    auto s = smith_normal_form_exact(A, {true, false, true, false});
    std::vector<std::vector<Integer>> m{{A(0, 0), A(0, 1)}, {A(1, 0), A(1, 1)}};
    Integer d = det(m);
    ASSERT_EQ(s.rank, 2u);
    EXPECT_EQ(s.diagonal[0] * s.diagonal[1], abs_value(d));
    Matrix<Integer> D(2, 2);
    D(0, 0) = s.diagonal[0];
    D(1, 1) = s.diagonal[1];
    EXPECT_TRUE(*s.U * A * *s.V == D);
}

TEST(Smith, CheckedArithmeticThrows) {
    EXPECT_THROW(checked_mul(std::int64_t(1) << 40, std::int64_t(1) << 40), ArithmeticOverflow);
    EXPECT_THROW(checked_add(INT64_MAX, std::int64_t(1)), ArithmeticOverflow);
    EXPECT_EQ(floor_mod(std::int64_t(-7), std::int64_t(3)), 2);
}
