#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "extlab/group.hpp"

namespace extlab {

// Automorphism as an image table. The lexicographic order on perm is the
// canonical total order; the identity permutation is always least.
struct Automorphism {
    std::vector<int> perm;

    int operator()(int x) const { return perm[x]; }

    friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
    friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

inline Automorphism identity_automorphism(const FiniteGroup& N) {
    Automorphism a;
    a.perm.resize(N.order());
    for (int x = 0; x < N.order(); ++x) a.perm[x] = x;
    return a;
}

// (a . b)(x) = a(b(x))
inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
    Automorphism r;
    r.perm.resize(b.perm.size());
    for (std::size_t x = 0; x < b.perm.size(); ++x) r.perm[x] = a.perm[b.perm[x]];
    return r;
}

inline Automorphism inverse(const Automorphism& a) {
    Automorphism r;
    r.perm.resize(a.perm.size());
    for (std::size_t x = 0; x < a.perm.size(); ++x) r.perm[a.perm[x]] = static_cast<int>(x);
    return r;
}

// x -> n x n^-1
inline Automorphism conjugation(const FiniteGroup& N, int n) {
    Automorphism a;
    a.perm.resize(N.order());
    for (int x = 0; x < N.order(); ++x) a.perm[x] = N.conj(n, x);
    return a;
}

inline bool is_automorphism(const FiniteGroup& N, const Automorphism& a) {
    if (static_cast<int>(a.perm.size()) != N.order()) return false;
    std::vector<char> hit(N.order(), 0);
    for (int v : a.perm) {
        if (v < 0 || v >= N.order() || hit[v]++) return false;
    }
    return is_homomorphism(N, N, a.perm);
}

// Complete list of automorphisms, sorted. Images of a minimal generating set
// are assigned one at a time (pruned by element order); each full assignment
// is spread along the Cayley graph and kept if it is a bijective homomorphism.
inline std::vector<Automorphism> automorphisms(const FiniteGroup& N, std::uint64_t budget = 10'000'000) {
    auto gens = minimal_generating_set(N);
    std::vector<int> img(gens.size());
    std::uint64_t steps = 0;
    std::vector<Automorphism> out;
    auto extend = [&]() -> bool {
        std::vector<int> f(N.order(), -1);
        f[N.identity()] = N.identity();
        std::vector<int> queue{N.identity()};
        for (std::size_t k = 0; k < queue.size(); ++k) {
            int x = queue[k];
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int y = N.mul(x, gens[i]);
                int fy = N.mul(f[x], img[i]);
                if (f[y] < 0) {
                    f[y] = fy;
                    queue.push_back(y);
                } else if (f[y] != fy) {
                    return false;
                }
            }
        }
        Automorphism a{f};
        if (!is_automorphism(N, a)) return false;
        out.push_back(std::move(a));
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == gens.size()) {
            extend();
            return;
        }
        int ord = N.element_order(gens[i]);
        for (int h = 0; h < N.order(); ++h) {
            if (N.element_order(h) != ord) continue;
            if (++steps > budget)
                throw BudgetExceeded("automorphism search exceeded " + std::to_string(budget) + " assignments");
            img[i] = h;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Aut(N) with its inner subgroup and the coset decomposition Out(N).
class AutTower {
public:
    AutTower(FiniteGroup N, std::uint64_t budget = 10'000'000) : N_(std::move(N)) {
        auts_ = automorphisms(N_, budget);
        for (std::size_t i = 0; i < auts_.size(); ++i) index_[auts_[i]] = static_cast<int>(i);
        const int na = static_cast<int>(auts_.size());

        conj_.resize(N_.order());
        std::vector<char> inner(na, 0);
        for (int n = 0; n < N_.order(); ++n) {
            conj_[n] = index_of(conjugation(N_, n));
            inner[conj_[n]] = 1;
        }
        for (int i = 0; i < na; ++i)
            if (inner[i]) inner_.push_back(i);

        std::vector<std::vector<int>> aut_table(na, std::vector<int>(na));
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) aut_table[i][j] = index_of(compose(auts_[i], auts_[j]));
        aut_group_ = make_group(aut_table, "Aut(" + N_.name() + ")");

        // Inn is normal: a Inn a^-1 = Inn
        for (int a = 0; a < na; ++a)
            for (int i : inner_)
                if (!inner[aut_group_.conj(a, i)]) throw InternalError("Inn(N) not normal in Aut(N)");

        // Cosets a.Inn, ordered by least member; auts_ is sorted so a scan in
        // index order meets each coset at its least member first.
        coset_of_.assign(na, -1);
        for (int a = 0; a < na; ++a) {
            if (coset_of_[a] >= 0) continue;
            const int c = static_cast<int>(coset_rep_.size());
            coset_rep_.push_back(a);
            for (int i : inner_) coset_of_[aut_group_.mul(a, i)] = c;
        }
        const int nc = static_cast<int>(coset_rep_.size());
        std::vector<std::vector<int>> out_table(nc, std::vector<int>(nc));
        for (int c = 0; c < nc; ++c)
            for (int d = 0; d < nc; ++d) out_table[c][d] = coset_of_[aut_group_.mul(coset_rep_[c], coset_rep_[d])];
        // well defined on every pair of members
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < na; ++b)
                if (coset_of_[aut_group_.mul(a, b)] != out_table[coset_of_[a]][coset_of_[b]])
                    throw InternalError("coset product not well defined");
        out_group_ = make_group(out_table, "Out(" + N_.name() + ")");
    }

    const FiniteGroup& N() const { return N_; }
    const std::vector<Automorphism>& auts() const { return auts_; }
    const Automorphism& aut(int i) const { return auts_[i]; }
    const FiniteGroup& aut_group() const { return aut_group_; }
    const FiniteGroup& out_group() const { return out_group_; }
    const std::vector<int>& inner() const { return inner_; }
    int identity_aut() const { return 0; }

    int index_of(const Automorphism& a) const {
        auto it = index_.find(a);
        if (it == index_.end()) throw InternalError("automorphism not in the enumerated list");
        return it->second;
    }
    int coset_of(int aut_index) const { return coset_of_[aut_index]; }
    int coset_of(const Automorphism& a) const { return coset_of_[index_of(a)]; }
    int coset_rep(int coset) const { return coset_rep_[coset]; }
    int out_order() const { return static_cast<int>(coset_rep_.size()); }
    // n -> index of the inner automorphism x -> n x n^-1
    int conj_index(int n) const { return conj_[n]; }

    bool is_inner(const Automorphism& a) const { return coset_of(a) == 0; }

    // Least n (index order) with conj_n = a, or -1.
    int inner_witness(const Automorphism& a) const {
        int ia = index_of(a);
        for (int n = 0; n < N_.order(); ++n)
            if (conj_[n] == ia) return n;
        return -1;
    }

private:
    FiniteGroup N_;
    std::vector<Automorphism> auts_;
    std::map<Automorphism, int> index_;
    std::vector<int> conj_;
    std::vector<int> inner_;
    FiniteGroup aut_group_;
    FiniteGroup out_group_;
    std::vector<int> coset_of_;
    std::vector<int> coset_rep_;
};

// psi : G -> Out(N), stored as coset indices.
struct OuterMap {
    std::shared_ptr<const AutTower> tower;
    std::vector<int> images;

    const FiniteGroup& target() const { return tower->N(); }
};

inline OuterMap make_outer_map(const FiniteGroup& G, std::shared_ptr<const AutTower> tower, std::vector<int> images) {
    for (int c : images)
        if (c < 0 || c >= tower->out_order()) throw NotAHomomorphism("coset index out of range");
    OuterMap psi{std::move(tower), std::move(images)};
    require_homomorphism(G, psi.tower->out_group(), psi.images);
    return psi;
}

inline OuterMap trivial_outer_map(const FiniteGroup& G, std::shared_ptr<const AutTower> tower) {
    return make_outer_map(G, std::move(tower), std::vector<int>(G.order(), 0));
}

inline std::vector<OuterMap> all_outer_maps(const FiniteGroup& G, const std::shared_ptr<const AutTower>& tower) {
    std::vector<OuterMap> out;
    for (auto& f : homomorphisms(G, tower->out_group())) out.push_back(OuterMap{tower, f});
    return out;
}

// Least automorphism in each coset, with phi(1) forced to the identity.
inline std::vector<Automorphism> canonical_lift(const FiniteGroup& G, const OuterMap& psi) {
    std::vector<Automorphism> phi(G.order());
    for (int g = 0; g < G.order(); ++g)
        phi[g] = g == G.identity() ? identity_automorphism(psi.target())
                                   : psi.tower->aut(psi.tower->coset_rep(psi.images[g]));
    return phi;
}

// Outer map induced by a table of automorphisms; checks it is a homomorphism.
inline OuterMap project_to_out(const FiniteGroup& G, std::shared_ptr<const AutTower> tower,
                               const std::vector<Automorphism>& phi) {
    std::vector<int> images(G.order());
    for (int g = 0; g < G.order(); ++g) images[g] = tower->coset_of(phi[g]);
    return make_outer_map(G, std::move(tower), std::move(images));
}

} // namespace extlab
