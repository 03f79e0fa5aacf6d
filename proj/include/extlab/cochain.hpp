#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "extlab/coeff_module.hpp"
#include "extlab/group.hpp"

namespace extlab {

using GroupPtr = std::shared_ptr<const FiniteGroup>;
using ModulePtr = std::shared_ptr<const CoeffModule>;

inline std::int64_t cell_count(int order, int degree, bool normalized) {
    std::int64_t base = normalized ? order - 1 : order, c = 1;
    for (int i = 0; i < degree; ++i) c = checked_mul(c, base);
    return c;
}

// Inhomogeneous cochain G^n -> Z stored densely, tuples in lexicographic
// order with g_1 most significant. Normalized cochains are stored on
// (G \ 1)^n only and vanish on every tuple containing the identity.
class Cochain {
public:
    Cochain() = default;

    Cochain(GroupPtr G, ModulePtr Z, int degree, bool normalized)
        : G_(std::move(G)), Z_(std::move(Z)), degree_(degree), normalized_(normalized) {
        if (Z_->group_order() != G_->order()) throw InvalidModule("module acts by a group of a different order");
        values_.assign(static_cast<std::size_t>(cells() * Z_->dim()), 0);
    }

    const GroupPtr& group() const { return G_; }
    const ModulePtr& module() const { return Z_; }
    int degree() const { return degree_; }
    bool normalized() const { return normalized_; }
    std::int64_t cells() const { return cell_count(G_->order(), degree_, normalized_); }
    const std::vector<std::int64_t>& raw() const { return values_; }

    // Cell index of a tuple, or -1 for a degenerate tuple in normalized storage.
    std::int64_t cell_of(const int* t) const {
        std::int64_t c = 0;
        const int e = G_->identity();
        const int base = normalized_ ? G_->order() - 1 : G_->order();
        for (int i = 0; i < degree_; ++i) {
            int x = t[i];
            if (normalized_) {
                if (x == e) return -1;
                if (x > e) --x;
            }
            c = c * base + x;
        }
        return c;
    }

    std::vector<int> tuple_of(std::int64_t cell) const {
        std::vector<int> t(degree_);
        const int e = G_->identity();
        const int base = normalized_ ? G_->order() - 1 : G_->order();
        for (int i = degree_ - 1; i >= 0; --i) {
            int x = static_cast<int>(cell % base);
            cell /= base;
            if (normalized_ && x >= e) ++x;
            t[i] = x;
        }
        return t;
    }

    ModElement at(const std::vector<int>& t) const { return at(t.data()); }
    ModElement at(const int* t) const {
        auto c = cell_of(t);
        if (c < 0) return Z_->zero();
        const int d = Z_->dim();
        return ModElement(values_.begin() + c * d, values_.begin() + (c + 1) * d);
    }

    void set(const std::vector<int>& t, const ModElement& v) {
        auto c = cell_of(t.data());
        if (c < 0) {
            if (!Z_->is_zero(v)) throw NotNormalized("nonzero value on a degenerate tuple");
            return;
        }
        set_cell(c, v);
    }

    void set_cell(std::int64_t c, const ModElement& v) {
        auto r = Z_->reduce(v);
        for (int i = 0; i < Z_->dim(); ++i) values_[c * Z_->dim() + i] = r[i];
    }

    ModElement cell_value(std::int64_t c) const {
        const int d = Z_->dim();
        return ModElement(values_.begin() + c * d, values_.begin() + (c + 1) * d);
    }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
    }

    // True if the cochain vanishes on tuples containing the identity.
    bool is_degenerate_free() const {
        if (normalized_) return true;
        for (std::int64_t c = 0; c < cells(); ++c) {
            auto t = tuple_of(c);
            if (std::find(t.begin(), t.end(), G_->identity()) != t.end() && !Z_->is_zero(cell_value(c)))
                return false;
        }
        return true;
    }

    Cochain as_normalized() const {
        if (normalized_) return *this;
        if (!is_degenerate_free()) throw NotNormalized("cochain is nonzero on a degenerate tuple");
        Cochain out(G_, Z_, degree_, true);
        for (std::int64_t c = 0; c < out.cells(); ++c) out.set_cell(c, at(out.tuple_of(c)));
        return out;
    }

    Cochain as_full() const {
        if (!normalized_) return *this;
        Cochain out(G_, Z_, degree_, false);
        for (std::int64_t c = 0; c < out.cells(); ++c) out.set_cell(c, at(out.tuple_of(c)));
        return out;
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.normalized_ == b.normalized_ && *a.G_ == *b.G_ && *a.Z_ == *b.Z_ &&
               a.values_ == b.values_;
    }

    friend Cochain operator+(const Cochain& a, const Cochain& b) { return combine(a, b, 1); }
    friend Cochain operator-(const Cochain& a, const Cochain& b) { return combine(a, b, -1); }
    Cochain operator-() const { return combine(Cochain(G_, Z_, degree_, normalized_), *this, -1); }

private:
    static Cochain combine(const Cochain& a, const Cochain& b, std::int64_t sign) {
        if (a.degree_ != b.degree_ || a.normalized_ != b.normalized_ || a.values_.size() != b.values_.size())
            throw InternalError("cochain shapes differ");
        Cochain r = a;
        for (std::int64_t c = 0; c < a.cells(); ++c) {
            auto v = a.cell_value(c);
            a.Z_->accumulate(v, b.cell_value(c), sign);
            r.set_cell(c, v);
        }
        return r;
    }

    GroupPtr G_;
    ModulePtr Z_;
    int degree_ = 0;
    bool normalized_ = false;
    std::vector<std::int64_t> values_;
};

inline Cochain make_cochain(GroupPtr G, ModulePtr Z, int degree, bool normalized,
                            const std::function<ModElement(const std::vector<int>&)>& f) {
    Cochain a(std::move(G), std::move(Z), degree, normalized);
    for (std::int64_t c = 0; c < a.cells(); ++c) a.set_cell(c, f(a.tuple_of(c)));
    return a;
}

// (delta a)(g_1..g_{n+1}) = g_1 a(g_2..) + sum_{i=1..n} (-1)^i a(.., g_i g_{i+1}, ..)
//                           + (-1)^{n+1} a(g_1..g_n)
inline Cochain coboundary(const Cochain& a) {
    const auto& G = *a.group();
    const auto& Z = *a.module();
    const int n = a.degree();
    Cochain out(a.group(), a.module(), n + 1, a.normalized());
    std::vector<int> s(n > 0 ? n : 1);
    for (std::int64_t c = 0; c < out.cells(); ++c) {
        auto t = out.tuple_of(c);
        ModElement v = Z.act(t[0], a.at(t.data() + 1));
        for (int i = 1; i <= n; ++i) {
            for (int j = 0, k = 0; j <= n; ++j) {
                if (j == i - 1) {
                    s[k++] = G.mul(t[j], t[j + 1]);
                    ++j;
                } else {
                    s[k++] = t[j];
                }
            }
            Z.accumulate(v, a.at(s.data()), i % 2 ? -1 : 1);
        }
        Z.accumulate(v, a.at(t.data()), (n + 1) % 2 ? -1 : 1);
        out.set_cell(c, v);
    }
    return out;
}

// Uniform coordinates: free ones in [-3, 3], torsion ones in [0, d).
template <class Rng>
Cochain random_cochain(GroupPtr G, ModulePtr Z, int degree, bool normalized, Rng& rng) {
    Cochain a(G, Z, degree, normalized);
    std::uniform_int_distribution<std::int64_t> small(-3, 3);
    for (std::int64_t c = 0; c < a.cells(); ++c) {
        ModElement v(Z->dim());
        for (int i = 0; i < Z->dim(); ++i) {
            auto d = Z->modulus(i);
            v[i] = d == 0 ? small(rng) : std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng);
        }
        a.set_cell(c, v);
    }
    return a;
}

// (f^* a)(g_1..g_n) = a(f g_1, .., f g_n) for a homomorphism f : H -> G; the
// module is re-housed over H with the action pulled back along f.
inline Cochain pullback(GroupPtr H, const std::vector<int>& f, const Cochain& a) {
    require_homomorphism(*H, *a.group(), f);
    auto Zh = std::make_shared<const CoeffModule>(a.module()->pullback(f));
    Cochain out(H, Zh, a.degree(), a.normalized());
    std::vector<int> s(a.degree());
    for (std::int64_t c = 0; c < out.cells(); ++c) {
        auto t = out.tuple_of(c);
        for (int i = 0; i < a.degree(); ++i) s[i] = f[t[i]];
        out.set_cell(c, a.at(s.data()));
    }
    return out;
}

} // namespace extlab
