#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extlab/cochain.hpp"
#include "extlab/smith.hpp"

namespace extlab {

struct CohomologyOptions {
    bool normalized = true;
    // cap on cochain-table entries of C^{n+1}
    std::int64_t max_entries = 200000;
    // internal guard on dense matrix size
    std::int64_t max_dense = 8'000'000;
};

// Integer matrix of delta^n : X_n -> X_{n+1}, X_n = Z^{cells * dim}. It lifts
// the coboundary on C^n = X_n / R_n, R_n generated by d_j e_j on torsion
// coordinates.
inline Matrix<Integer> coboundary_matrix(const GroupPtr& G, const ModulePtr& Z, int n, bool normalized) {
    Cochain src(G, Z, n, normalized), dst(G, Z, n + 1, normalized);
    const int d = Z->dim();
    Matrix<Integer> D(static_cast<std::size_t>(dst.cells() * d), static_cast<std::size_t>(src.cells() * d));
    std::vector<int> s(n > 0 ? n : 1);
    for (std::int64_t c = 0; c < dst.cells(); ++c) {
        auto t = dst.tuple_of(c);
        auto add_block = [&](const int* tuple, std::int64_t sign, const Matrix<std::int64_t>* m) {
            auto sc = src.cell_of(tuple);
            if (sc < 0) return;
            for (int r = 0; r < d; ++r)
                for (int q = 0; q < d; ++q) {
                    std::int64_t v = m ? (*m)(r, q) : (r == q ? 1 : 0);
                    if (v != 0) D(c * d + r, sc * d + q) += sign * v;
                }
        };
        add_block(t.data() + 1, 1, &Z->action(t[0]));
        for (int i = 1; i <= n; ++i) {
            for (int j = 0, k = 0; j <= n; ++j) {
                if (j == i - 1) {
                    s[k++] = G->mul(t[j], t[j + 1]);
                    ++j;
                } else {
                    s[k++] = t[j];
                }
            }
            add_block(s.data(), i % 2 ? -1 : 1, nullptr);
        }
        add_block(t.data(), (n + 1) % 2 ? -1 : 1, nullptr);
    }
    return D;
}

// H^n(G, Z) with class coordinates and a coboundary solver.
//
// K = {x in X_n : D_n x in R_{n+1}} is computed in two stages: the exact
// kernel B0 of the rows landing in free coordinates, then the congruences of
// the torsion rows solved on B0 via a second Smith form. The quotient
// K / (im D_{n-1} + R_n) is read off a third Smith form in K-coordinates.
class CohomologyGroup {
public:
    CohomologyGroup(GroupPtr G, ModulePtr Z, int n, CohomologyOptions opts = {})
        : G_(std::move(G)), Z_(std::move(Z)), n_(n), normalized_(opts.normalized) {
        if (n < 0) throw InternalError("negative degree");
        const int d = Z_->dim();
        const std::int64_t next_entries = cell_count(G_->order(), n + 1, normalized_) * d;
        if (next_entries > opts.max_entries)
            throw BudgetExceeded("C^" + std::to_string(n + 1) + " has " + std::to_string(next_entries) +
                                 " entries, cap " + std::to_string(opts.max_entries));
        m_ = static_cast<std::size_t>(cell_count(G_->order(), n, normalized_) * d);
        m_prev_ = n == 0 ? 0 : static_cast<std::size_t>(cell_count(G_->order(), n - 1, normalized_) * d);
        if (static_cast<std::int64_t>(m_) * next_entries > opts.max_dense)
            throw BudgetExceeded("coboundary matrix too large for dense elimination");

        auto Dn = coboundary_matrix(G_, Z_, n, normalized_);

        // Stage 1: exact kernel of the free rows.
        std::vector<std::size_t> free_rows, tors_rows;
        for (std::size_t r = 0; r < Dn.rows(); ++r)
            (Z_->modulus(static_cast<int>(r % d)) == 0 ? free_rows : tors_rows).push_back(r);
        Matrix<Integer> F(free_rows.size(), m_);
        for (std::size_t i = 0; i < free_rows.size(); ++i)
            for (std::size_t j = 0; j < m_; ++j) F(i, j) = Dn(free_rows[i], j);
        Matrix<Integer> B0, P;  // B0 : m x k0 basis, P : k0 x m coordinate projection
        if (free_rows.empty()) {
            B0 = Matrix<Integer>::identity(m_);
            P = B0;
        } else {
            auto sf = smith_normal_form_exact(F, {false, false, true, true});
            const std::size_t k0 = m_ - sf.rank;
            B0 = Matrix<Integer>(m_, k0);
            P = Matrix<Integer>(k0, m_);
            for (std::size_t i = 0; i < m_; ++i)
                for (std::size_t j = 0; j < k0; ++j) {
                    B0(i, j) = (*sf.V)(i, sf.rank + j);
                    P(j, i) = (*sf.V_inv)(sf.rank + j, i);
                }
        }
        const std::size_t k0 = B0.cols();

        // Stage 2: torsion rows as congruences mod L after scaling row r by L / d_r.
        std::int64_t L = 1;
        for (auto q : Z_->torsion()) L = lcm_value(L, q);
        Matrix<Integer> W = Matrix<Integer>::identity(k0), W_inv = W;
        scale_.assign(k0, Integer(1));
        if (!tors_rows.empty() && k0 > 0) {
            Matrix<Integer> T(tors_rows.size(), m_);
            for (std::size_t i = 0; i < tors_rows.size(); ++i) {
                std::int64_t f = L / Z_->modulus(static_cast<int>(tors_rows[i] % d));
                for (std::size_t j = 0; j < m_; ++j)
                    if (Dn(tors_rows[i], j) != 0) T(i, j) = Dn(tors_rows[i], j) * f;
            }
            auto M2 = T * B0;
            auto s2 = smith_normal_form_exact(M2, {false, false, true, true});
            W = *s2.V;
            W_inv = *s2.V_inv;
            for (std::size_t i = 0; i < s2.rank; ++i) scale_[i] = Integer(L) / gcd_value(s2.diagonal[i], Integer(L));
        }
        // basis of K and the map x -> K-coordinates (before dividing by scale_)
        BK_ = B0 * W;
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < k0; ++j) BK_(i, j) *= scale_[j];
        Pk_ = W_inv * P;

        // Stage 3: quotient by im D_{n-1} and the relations R_n.
        std::vector<std::vector<Integer>> cols;
        if (n > 0) {
            auto Dp = coboundary_matrix(G_, Z_, n - 1, normalized_);
            for (std::size_t j = 0; j < m_prev_; ++j) {
                std::vector<Integer> x(m_);
                for (std::size_t i = 0; i < m_; ++i) x[i] = Dp(i, j);
                cols.push_back(kernel_coords_raw(x));
            }
        }
        for (std::size_t j = 0; j < m_; ++j) {
            auto q = Z_->modulus(static_cast<int>(j % d));
            if (q == 0) continue;
            std::vector<Integer> x(m_, Integer(0));
            x[j] = q;
            cols.push_back(kernel_coords_raw(x));
        }
        C_ = Matrix<Integer>(k0, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < k0; ++i) C_(i, j) = cols[j][i];
        auto s3 = smith_normal_form_exact(C_, {true, true, true, false});
        U_ = *s3.U;
        U_inv_ = *s3.U_inv;
        V_ = *s3.V;
        diag_.assign(k0, Integer(0));
        for (std::size_t i = 0; i < s3.rank; ++i) diag_[i] = s3.diagonal[i];
        rank_ = s3.rank;
        for (std::size_t i = 0; i < k0; ++i) {
            if (diag_[i] == 1) continue;
            gens_.push_back(i);
            factors_.push_back(diag_[i]);
        }
        for (std::size_t g : gens_) {
            Cochain rep(G_, Z_, n_, normalized_);
            std::vector<Integer> x(m_, Integer(0));
            for (std::size_t i = 0; i < m_; ++i)
                for (std::size_t j = 0; j < k0; ++j) x[i] += BK_(i, j) * U_inv_(j, g);
            fill(rep, x);
            reps_.push_back(std::move(rep));
        }
    }

    int degree() const { return n_; }
    bool normalized() const { return normalized_; }
    const GroupPtr& group() const { return G_; }
    const ModulePtr& module() const { return Z_; }

    // Divisibility-ordered invariant factors; 0 stands for a copy of Z.
    std::vector<Integer> invariant_factors() const { return factors_; }
    std::vector<std::int64_t> invariant_factors_int() const {
        std::vector<std::int64_t> out;
        for (auto& f : factors_) out.push_back(to_int64(f));
        return out;
    }
    // Number of classes, or 0 when H^n is infinite.
    Integer order() const {
        Integer o = 1;
        for (auto& f : factors_) {
            if (f == 0) return 0;
            o *= f;
        }
        return o;
    }
    const std::vector<Cochain>& representatives() const { return reps_; }

    void require_cocycle(const Cochain& a) const {
        check_shape(a);
        if (!coboundary(a).is_zero()) throw NotACocycle("delta of the given " + std::to_string(n_) + "-cochain is nonzero");
    }

    // Coordinates of [a] against the representatives (reduced modulo the
    // invariant factors).
    std::vector<Integer> class_of(const Cochain& a) const {
        auto u = reduced(a);
        std::vector<Integer> out;
        for (std::size_t t = 0; t < gens_.size(); ++t) {
            Integer v = u[gens_[t]];
            out.push_back(factors_[t] == 0 ? v : floor_mod(v, factors_[t]));
        }
        return out;
    }

    bool is_coboundary(const Cochain& a) const { return witness(a).has_value(); }

    // Some b with delta b = a, or nothing if [a] != 0.
    std::optional<Cochain> witness(const Cochain& a) const {
        auto u = reduced(a);
        std::vector<Integer> wp(C_.cols(), Integer(0));
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (i < rank_) {
                if (u[i] % diag_[i] != 0) return std::nullopt;
                wp[i] = u[i] / diag_[i];
            } else if (u[i] != 0) {
                return std::nullopt;
            }
        }
        Cochain b = n_ == 0 ? Cochain() : Cochain(G_, Z_, n_ - 1, normalized_);
        if (n_ == 0) return b;
        std::vector<Integer> x(m_prev_, Integer(0));
        for (std::size_t i = 0; i < m_prev_; ++i)
            for (std::size_t j = 0; j < wp.size(); ++j)
                if (wp[j] != 0) x[i] += V_(i, j) * wp[j];
        fill(b, x);
        if (!(coboundary(b) == a)) throw InternalError("coboundary solver produced a wrong witness");
        return b;
    }

    bool class_equal(const Cochain& a, const Cochain& b) const { return is_coboundary(a - b); }

private:
    void check_shape(const Cochain& a) const {
        if (a.degree() != n_ || a.normalized() != normalized_ || !(*a.group() == *G_) || !(*a.module() == *Z_))
            throw InternalError("cochain does not belong to this complex");
    }

    std::vector<Integer> kernel_coords_raw(const std::vector<Integer>& x) const {
        const std::size_t k0 = BK_.cols();
        std::vector<Integer> w(k0, Integer(0));
        for (std::size_t i = 0; i < k0; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                if (x[j] != 0 && Pk_(i, j) != 0) w[i] += Pk_(i, j) * x[j];
        for (std::size_t i = 0; i < k0; ++i) {
            if (w[i] % scale_[i] != 0) throw InternalError("vector is not in the cocycle lattice");
            w[i] /= scale_[i];
        }
        for (std::size_t i = 0; i < m_; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < k0; ++j)
                if (w[j] != 0) acc += BK_(i, j) * w[j];
            if (acc != x[i]) throw InternalError("vector is not in the cocycle lattice");
        }
        return w;
    }

    // U * (K-coordinates of a)
    std::vector<Integer> reduced(const Cochain& a) const {
        require_cocycle(a);
        std::vector<Integer> x(m_);
        for (std::size_t i = 0; i < m_; ++i) x[i] = a.raw()[i];
        auto w = kernel_coords_raw(x);
        std::vector<Integer> u(w.size(), Integer(0));
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j)
                if (w[j] != 0) u[i] += U_(i, j) * w[j];
        return u;
    }

    void fill(Cochain& c, const std::vector<Integer>& x) const {
        const int d = Z_->dim();
        for (std::int64_t cell = 0; cell < c.cells(); ++cell) {
            ModElement v(d);
            for (int i = 0; i < d; ++i) {
                Integer xi = x[cell * d + i];
                auto q = Z_->modulus(i);
                v[i] = to_int64(q == 0 ? xi : floor_mod(xi, Integer(q)));
            }
            c.set_cell(cell, v);
        }
    }

    GroupPtr G_;
    ModulePtr Z_;
    int n_;
    bool normalized_;
    std::size_t m_ = 0, m_prev_ = 0;
    std::vector<Integer> scale_;
    Matrix<Integer> BK_, Pk_, C_, U_, U_inv_, V_;
    std::vector<Integer> diag_;
    std::size_t rank_ = 0;
    std::vector<std::size_t> gens_;
    std::vector<Integer> factors_;
    std::vector<Cochain> reps_;
};

inline CohomologyGroup cohomology(GroupPtr G, ModulePtr Z, int n, bool normalized = true,
                                  std::int64_t max_entries = 200000) {
    CohomologyOptions o;
    o.normalized = normalized;
    o.max_entries = max_entries;
    return CohomologyGroup(std::move(G), std::move(Z), n, o);
}

// Some b with delta b = a, or nothing; normalized when a is.
inline std::optional<Cochain> coboundary_witness(const Cochain& a) {
    if (!coboundary(a).is_zero()) throw NotACocycle("delta of the given cochain is nonzero");
    CohomologyOptions o;
    o.normalized = a.normalized();
    return CohomologyGroup(a.group(), a.module(), a.degree(), o).witness(a);
}

inline bool class_equal(const Cochain& a, const Cochain& b) { return coboundary_witness(a - b).has_value(); }

// Over a finite group every cochain is bounded, so the comparison map is the
// identity on cochains and every class lies in its image.
struct ComparisonVerdict {
    bool in_image;
    std::string justification;
};

inline ComparisonVerdict comparison_image_flag(const CohomologyGroup&) {
    return {true, "finite group: every cochain is bounded, so H_b^n = H^n and c^n is the identity"};
}

} // namespace extlab
