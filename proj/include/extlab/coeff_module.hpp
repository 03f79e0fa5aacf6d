#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "extlab/group.hpp"
#include "extlab/integer.hpp"
#include "extlab/matrix.hpp"

namespace extlab {

using ModElement = std::vector<std::int64_t>;

// Z^r + Z/d_1 + ... + Z/d_k with an action of a finite group given per
// element by integer matrices. Free coordinates come first.
class CoeffModule {
public:
    CoeffModule() = default;

    // Trivial action of a group of the given order.
    CoeffModule(int rank, std::vector<std::int64_t> torsion, int group_order = 1,
                std::vector<std::int64_t> weights = {})
        : rank_(rank), torsion_(std::move(torsion)), weights_(std::move(weights)) {
        if (rank_ < 0) throw InvalidModule("negative rank");
        for (auto d : torsion_)
            if (d < 2) throw InvalidModule("torsion modulus " + std::to_string(d) + " < 2");
        if (weights_.empty()) weights_.assign(dim(), 1);
        if (static_cast<int>(weights_.size()) != dim()) throw InvalidModule("weights length mismatch");
        for (auto w : weights_)
            if (w <= 0) throw InvalidModule("weights must be positive");
        action_.assign(group_order, Matrix<std::int64_t>::identity(dim()));
    }

    int rank() const { return rank_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    int dim() const { return rank_ + static_cast<int>(torsion_.size()); }
    int group_order() const { return static_cast<int>(action_.size()); }
    // 0 for a free coordinate
    std::int64_t modulus(int i) const { return i < rank_ ? 0 : torsion_[i - rank_]; }
    const Matrix<std::int64_t>& action(int g) const { return action_[g]; }

    bool is_trivial_action() const {
        auto id = Matrix<std::int64_t>::identity(dim());
        return std::all_of(action_.begin(), action_.end(), [&](auto& m) { return m == id; });
    }

    // Finite if no free part; order is the product of moduli.
    std::int64_t order() const {
        if (rank_ > 0) return 0;
        std::int64_t o = 1;
        for (auto d : torsion_) o = checked_mul(o, d);
        return o;
    }

    void set_action(int g, Matrix<std::int64_t> m) {
        if (static_cast<int>(m.rows()) != dim() || static_cast<int>(m.cols()) != dim())
            throw InvalidModule("action matrix has wrong size");
        action_[g] = std::move(m);
    }

    ModElement zero() const { return ModElement(dim(), 0); }

    ModElement basis(int i) const {
        auto v = zero();
        v[i] = 1;
        return v;
    }

    ModElement reduce(ModElement v) const {
        for (int i = rank_; i < dim(); ++i) v[i] = floor_mod(v[i], torsion_[i - rank_]);
        return v;
    }

    ModElement add(const ModElement& a, const ModElement& b) const {
        ModElement r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = checked_add(a[i], b[i]);
        return reduce(std::move(r));
    }

    ModElement sub(const ModElement& a, const ModElement& b) const {
        ModElement r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = checked_sub(a[i], b[i]);
        return reduce(std::move(r));
    }

    ModElement neg(const ModElement& a) const { return sub(zero(), a); }

    ModElement scale(const ModElement& a, std::int64_t k) const {
        ModElement r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = checked_mul(a[i], k);
        return reduce(std::move(r));
    }

    // r += k * a, unreduced; callers reduce once at the end.
    void accumulate(ModElement& r, const ModElement& a, std::int64_t k) const {
        for (int i = 0; i < dim(); ++i) r[i] = checked_add(r[i], checked_mul(a[i], k));
    }

    ModElement act(int g, const ModElement& v) const {
        const auto& m = action_[g];
        ModElement r(dim(), 0);
        for (int i = 0; i < dim(); ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < dim(); ++j)
                if (m(i, j) != 0 && v[j] != 0) acc = checked_add(acc, checked_mul(m(i, j), v[j]));
            r[i] = acc;
        }
        return reduce(std::move(r));
    }

    bool is_zero(const ModElement& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
    }

    // Representative of a torsion coordinate in (-d/2, d/2].
    static std::int64_t centered(std::int64_t x, std::int64_t d) {
        std::int64_t r = floor_mod(x, d);
        return 2 * r > d ? r - d : r;
    }

    std::int64_t plain_norm(const ModElement& v) const {
        std::int64_t best = 0;
        for (int i = 0; i < dim(); ++i) {
            std::int64_t c = i < rank_ ? v[i] : centered(v[i], torsion_[i - rank_]);
            best = std::max(best, checked_mul(weights_[i], c < 0 ? checked_sub(0, c) : c));
        }
        return best;
    }

    // Weighted sup-norm maximised over the orbit. For actions that permute
    // coordinates up to sign this is the plain weighted sup-norm; in general
    // it is the least G-invariant norm dominating it.
    std::int64_t norm(const ModElement& v) const {
        std::int64_t best = 0;
        for (int g = 0; g < group_order(); ++g) best = std::max(best, plain_norm(act(g, v)));
        return best;
    }

    // All elements of norm <= K, in lexicographic coordinate order. The
    // bounding box |x_i| <= K / w_i contains the ball since norm >= plain_norm.
    std::vector<ModElement> ball(std::int64_t K) const {
        std::vector<std::int64_t> lo(dim()), hi(dim());
        for (int i = 0; i < dim(); ++i) {
            if (i < rank_) {
                lo[i] = -(K / weights_[i]);
                hi[i] = K / weights_[i];
            } else {
                lo[i] = 0;
                hi[i] = torsion_[i - rank_] - 1;
            }
        }
        std::vector<ModElement> out;
        ModElement v = lo;
        if (dim() == 0) return {ModElement{}};
        for (;;) {
            if (norm(v) <= K) out.push_back(v);
            int i = dim() - 1;
            while (i >= 0 && v[i] == hi[i]) {
                v[i] = lo[i];
                --i;
            }
            if (i < 0) break;
            ++v[i];
        }
        return out;
    }

    // Module axioms for the acting group G.
    void validate(const FiniteGroup& G) const {
        if (group_order() != G.order())
            throw InvalidModule("action given for " + std::to_string(group_order()) + " elements, group has " +
                                std::to_string(G.order()));
        for (int j = 0; j < dim(); ++j) {
            std::int64_t d = modulus(j);
            if (d == 0) continue;
            for (int g = 0; g < G.order(); ++g) {
                // d * (image of a d-torsion basis vector) must vanish
                ModElement col(dim());
                for (int i = 0; i < dim(); ++i) col[i] = action_[g](i, j);
                if (!is_zero(scale(col, d)))
                    throw InvalidModule("action of " + std::to_string(g) + " does not respect torsion at coordinate " +
                                        std::to_string(j));
            }
        }
        for (int j = 0; j < dim(); ++j) {
            auto e = basis(j);
            if (act(G.identity(), e) != reduce(e)) throw InvalidModule("identity does not act trivially");
            for (int g = 0; g < G.order(); ++g)
                for (int h = 0; h < G.order(); ++h)
                    if (act(g, act(h, e)) != act(G.mul(g, h), e))
                        throw InvalidModule("action(" + std::to_string(g) + ")action(" + std::to_string(h) +
                                            ") != action(gh)");
        }
        for (int g = 0; g < G.order(); ++g) {
            // invertibility: the inverse element must undo the action
            for (int j = 0; j < dim(); ++j)
                if (act(G.inv(g), act(g, basis(j))) != reduce(basis(j)))
                    throw InvalidModule("action is not invertible");
        }
    }

    // Same module with the action pulled back along f : H -> G.
    CoeffModule pullback(const std::vector<int>& f) const {
        CoeffModule m = *this;
        m.action_.clear();
        for (int g : f) m.action_.push_back(action_[g]);
        return m;
    }

    friend bool operator==(const CoeffModule&, const CoeffModule&) = default;

private:
    int rank_ = 0;
    std::vector<std::int64_t> torsion_;
    std::vector<std::int64_t> weights_;
    std::vector<Matrix<std::int64_t>> action_;
};

// Z or Z/d with a group acting through a sign character chi : G -> {0, 1}.
inline CoeffModule sign_module(const FiniteGroup& G, const std::vector<int>& chi, std::int64_t modulus = 0) {
    CoeffModule m = modulus == 0 ? CoeffModule(1, {}, G.order()) : CoeffModule(0, {modulus}, G.order());
    for (int g = 0; g < G.order(); ++g) {
        Matrix<std::int64_t> a(1, 1);
        a(0, 0) = chi[g] ? -1 : 1;
        m.set_action(g, a);
    }
    m.validate(G);
    return m;
}

// First surjection onto Z/2 in lexicographic order, or empty if none exists.
inline std::vector<int> first_sign_character(const FiniteGroup& G) {
    auto z2 = cyclic_group(2);
    for (auto& f : homomorphisms(G, z2))
        if (std::find(f.begin(), f.end(), 1) != f.end()) return f;
    return {};
}

} // namespace extlab
