#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extlab/cohomology.hpp"
#include "extlab/free_group.hpp"

namespace extlab {

// N = Z x F, F free on <g,h> for g, h in M \ 1, with
//   phi(g)<h,i> = (alpha(g,h,i), <g,h><gh,i><g,hi>^-1),   phi(g)(z) = g.z
// and <g,1> = <1,g> = 1.
class MacLaneGroup {
public:
    MacLaneGroup(GroupPtr M, Cochain alpha) : M_(std::move(M)), alpha_(std::move(alpha)) {
        Z_ = alpha_.module();
        pos_.assign(M_->order(), -1);
        auto ne = M_->nonidentity();
        for (std::size_t i = 0; i < ne.size(); ++i) pos_[ne[i]] = static_cast<int>(i);
        k_ = static_cast<int>(ne.size());
        for (int a : ne)
            for (int b : ne) pairs_.push_back({a, b});
        images_.assign(M_->order(), {});
        for (int g = 0; g < M_->order(); ++g)
            for (auto [h, i] : pairs_) {
                FreeWord w = word_mul(word_mul(bracket(g, h), bracket(M_->mul(g, h), i)),
                                      word_inv(bracket(g, M_->mul(h, i))));
                images_[g].push_back({alpha_.at(std::vector<int>{g, h, i}), w});
            }
    }

    const GroupPtr& group() const { return M_; }
    const CoeffModule& module() const { return *Z_; }
    const Cochain& alpha() const { return alpha_; }
    int rank() const { return k_ * k_; }
    std::pair<int, int> symbol_pair(int s) const { return pairs_[s]; }

    int symbol(int g, int h) const {
        if (pos_[g] < 0 || pos_[h] < 0) return -1;
        return pos_[g] * k_ + pos_[h];
    }

    FreeWord bracket(int g, int h) const {
        int s = symbol(g, h);
        return s < 0 ? FreeWord{} : word_letter(s);
    }

    MixedElement generator(int s) const { return {Z_->zero(), word_letter(s)}; }
    MixedElement identity() const { return {Z_->zero(), {}}; }
    MixedElement mul(const MixedElement& a, const MixedElement& b) const { return mixed_mul(*Z_, a, b); }
    MixedElement inv(const MixedElement& a) const { return mixed_inv(*Z_, a); }
    MixedElement conj(const MixedElement& u, const MixedElement& x) const { return mixed_conj(*Z_, u, x); }

    // phi(g) applied letter by letter; an inverse letter maps to the inverse image.
    MixedElement apply(int g, const MixedElement& x) const {
        MixedElement out{Z_->act(g, x.z), {}};
        for (auto& l : x.w.letters) {
            const auto& img = images_[g][l.symbol];
            out = mul(out, l.exp > 0 ? img : inv(img));
        }
        return out;
    }

    template <class Rng>
    MixedElement random_element(Rng& rng, int max_len) const {
        std::uniform_int_distribution<int> len(0, max_len), sym(0, rank() - 1), sign(0, 1);
        std::uniform_int_distribution<std::int64_t> small(-3, 3);
        MixedElement x = identity();
        for (int i = 0; i < Z_->dim(); ++i) x.z[i] = small(rng);
        x.z = Z_->reduce(x.z);
        std::vector<Letter> ls;
        for (int i = len(rng); i > 0; --i) ls.push_back({sym(rng), sign(rng) ? 1 : -1});
        x.w = word_reduce(ls);
        return x;
    }

private:
    GroupPtr M_;
    Cochain alpha_;
    ModulePtr Z_;
    std::vector<int> pos_;
    int k_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<MixedElement>> images_;
};

struct RealizationResult {
    GroupPtr M;
    Cochain alpha;                    // normalized input class
    bool used_double_flag = false;    // realized over M x Z/2
    std::vector<int> iota, pi;        // M -> M', M' -> M
    std::shared_ptr<const MacLaneGroup> N;
    int rank_F = 0;
    bool center_is_Z = false;
    std::string center_reason;
    std::int64_t composition_checks = 0;
    bool composition_ok = true;
    std::int64_t homomorphism_checks = 0;
    bool homomorphism_ok = true;
    std::int64_t bijectivity_checks = 0;
    bool bijective_on_generators = true;
    Cochain obstruction;
    bool roundtrip = false;
    std::vector<std::string> sample_images;
};

// o_b over G for psi = [phi] . iota . f (f : G -> M) with zeta(g,h) = <g,h>.
// Each value is computed in Z x F and must have trivial word part.
inline Cochain obstruction_along(const MacLaneGroup& N, const std::vector<int>& to_Mp, GroupPtr G,
                                 ModulePtr ZG) {
    Cochain o(G, ZG, 3, true);
    auto zeta = [&](int a, int b) { return MixedElement{N.module().zero(), N.bracket(to_Mp[a], to_Mp[b])}; };
    for (std::int64_t c = 0; c < o.cells(); ++c) {
        auto t = o.tuple_of(c);
        int g = t[0], h = t[1], i = t[2];
        auto lhs = N.mul(N.apply(to_Mp[g], zeta(h, i)), zeta(g, G->mul(h, i)));
        auto rhs = N.mul(zeta(g, h), zeta(G->mul(g, h), i));
        auto v = N.mul(lhs, N.inv(rhs));
        if (!v.w.empty()) throw InternalError("obstruction value has a nontrivial free part");
        o.set_cell(c, v.z);
    }
    if (!coboundary(o).is_zero()) throw InternalError("symbolic obstruction is not a cocycle");
    return o;
}

inline Cochain normalized_cocycle_input(const Cochain& alpha, int degree) {
    if (alpha.degree() != degree) throw InvalidCocycle("expected a " + std::to_string(degree) + "-cochain");
    Cochain a = alpha.as_normalized();  // throws NotNormalized
    if (!coboundary(a).is_zero()) throw NotACocycle("alpha is not a cocycle");
    return a;
}

inline RealizationResult realize(GroupPtr M, const Cochain& alpha_in, std::uint64_t seed = 0, int samples = 200) {
    if (!(*alpha_in.group() == *M)) throw InvalidCocycle("alpha lives over a different group");
    if (M->order() > 6) throw SymbolBudgetExceeded("|M| = " + std::to_string(M->order()) + " > 6");
    RealizationResult r;
    r.M = M;
    r.alpha = normalized_cocycle_input(alpha_in, 3);

    GroupPtr Mp = M;
    Cochain alpha_p = r.alpha;
    r.iota.resize(M->order());
    for (int g = 0; g < M->order(); ++g) r.iota[g] = g;
    r.pi = r.iota;
    if (M->order() == 2) {
        // F would be cyclic, whose centre is all of F: enlarge to M x Z/2.
        r.used_double_flag = true;
        Mp = std::make_shared<const FiniteGroup>(direct_product(*M, cyclic_group(2)));
        r.pi.assign(Mp->order(), 0);
        for (int x = 0; x < Mp->order(); ++x) r.pi[x] = x / 2;
        for (int g = 0; g < M->order(); ++g) r.iota[g] = g * 2;
        alpha_p = pullback(Mp, r.pi, r.alpha);
    }
    auto N = std::make_shared<const MacLaneGroup>(Mp, alpha_p);
    r.N = N;
    r.rank_F = N->rank();

    // Centre of Z x F is Z x Z(F); Z(F) is trivial once F has rank >= 2.
    // Bounded probe: no nonempty reduced word of length <= 3 commutes with
    // every generator.
    r.center_is_Z = r.rank_F >= 2;
    if (r.center_is_Z) {
        std::vector<FreeWord> words{FreeWord{}};
        std::vector<FreeWord> frontier{FreeWord{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<FreeWord> next;
            for (auto& w : frontier)
                for (int s = 0; s < r.rank_F; ++s)
                    for (int e : {1, -1}) {
                        auto v = word_mul(w, word_letter(s, e));
                        if (v.length() == static_cast<std::size_t>(len)) next.push_back(v);
                    }
            for (auto& w : next) {
                bool central = true;
                for (int s = 0; s < r.rank_F && central; ++s)
                    central = word_mul(w, word_letter(s)) == word_mul(word_letter(s), w);
                if (central) r.center_is_Z = false;
            }
            frontier = std::move(next);
        }
        r.center_reason = r.center_is_Z ? "F free of rank " + std::to_string(r.rank_F) +
                                              " >= 2 has trivial centre; no central word of length <= 3"
                                        : "a short central word exists";
    } else {
        r.center_reason = "F has rank " + std::to_string(r.rank_F) + " and is abelian";
    }

    // phi(g1) phi(g2) = conj_<g1,g2> phi(g1 g2): all generators, then samples.
    std::mt19937_64 rng(seed);
    const auto& G = *Mp;
    auto comp_check = [&](int g1, int g2, const MixedElement& x) {
        ++r.composition_checks;
        auto lhs = N->apply(g1, N->apply(g2, x));
        auto rhs = N->conj(MixedElement{N->module().zero(), N->bracket(g1, g2)}, N->apply(G.mul(g1, g2), x));
        if (!(lhs == rhs)) r.composition_ok = false;
    };
    for (int g1 = 0; g1 < G.order(); ++g1)
        for (int g2 = 0; g2 < G.order(); ++g2) {
            for (int s = 0; s < r.rank_F; ++s) comp_check(g1, g2, N->generator(s));
            for (int j = 0; j < N->module().dim(); ++j) comp_check(g1, g2, {N->module().basis(j), {}});
        }
    std::uniform_int_distribution<int> pickg(0, G.order() - 1);
    for (int t = 0; t < samples; ++t) {
        int g1 = pickg(rng), g2 = pickg(rng);
        auto x = N->random_element(rng, 6), y = N->random_element(rng, 6);
        comp_check(g1, g2, x);
        ++r.homomorphism_checks;
        if (!(N->apply(g1, N->mul(x, y)) == N->mul(N->apply(g1, x), N->apply(g1, y)))) r.homomorphism_ok = false;
    }

    // Bijectivity of phi(g), certified on generators: a left inverse
    // x -> conj_{<g^-1,g>}^-1 phi(g^-1) phi(g) x = x, and a preimage
    // phi(g^-1)(u^-1 s u), u = <g,g^-1>, of every generator s.
    for (int g = 0; g < G.order(); ++g) {
        int gi = G.inv(g);
        MixedElement a{N->module().zero(), N->bracket(gi, g)};
        MixedElement u{N->module().zero(), N->bracket(g, gi)};
        std::vector<MixedElement> gens;
        for (int s = 0; s < r.rank_F; ++s) gens.push_back(N->generator(s));
        for (int j = 0; j < N->module().dim(); ++j) gens.push_back({N->module().basis(j), {}});
        for (auto& s : gens) {
            ++r.bijectivity_checks;
            auto back = N->conj(N->inv(a), N->apply(gi, N->apply(g, s)));
            auto pre = N->apply(gi, N->conj(N->inv(u), s));
            if (!(back == s) || !(N->apply(g, pre) == s)) r.bijective_on_generators = false;
        }
    }

    for (int g = 0; g < std::min(G.order(), 3); ++g)
        if (r.rank_F > 0) {
            auto [h, i] = N->symbol_pair(0);
            auto img = N->apply(g, N->generator(0));
            std::string z;
            for (auto v : img.z) z += std::to_string(v) + " ";
            r.sample_images.push_back("phi(" + std::to_string(g) + ")<" + std::to_string(h) + "," + std::to_string(i) +
                                      "> = (" + z + "| " + img.w.str() + ")");
        }

    r.obstruction = obstruction_along(*N, r.iota, M, r.alpha.module());
    CohomologyGroup H3(M, r.alpha.module(), 3, CohomologyOptions{});
    r.roundtrip = H3.class_equal(r.obstruction, r.alpha);
    return r;
}

struct FSetMember {
    Cochain pulled;
    std::vector<std::int64_t> h3_factors;
    std::vector<std::int64_t> class_coords;
    std::string provenance;
};

// Phi^* alpha as a class in H^3(G, Phi^* Z).
inline FSetMember f_set_member(GroupPtr G, const std::vector<int>& Phi, const Cochain& alpha) {
    auto a = normalized_cocycle_input(alpha, 3);
    FSetMember m;
    m.pulled = pullback(G, Phi, a);
    CohomologyGroup H3(G, m.pulled.module(), 3, CohomologyOptions{});
    m.h3_factors = H3.invariant_factors_int();
    for (auto& v : H3.class_of(m.pulled)) m.class_coords.push_back(to_int64(v));
    m.provenance = "pullback along a homomorphism to a group of order " + std::to_string(a.group()->order());
    return m;
}

// The obstruction of (G, N, psi . Phi) for a realization over M.
inline Cochain realization_obstruction_along(const RealizationResult& r, GroupPtr G, const std::vector<int>& Phi) {
    require_homomorphism(*G, *r.M, Phi);
    std::vector<int> to_Mp(G->order());
    for (int g = 0; g < G->order(); ++g) to_Mp[g] = r.iota[Phi[g]];
    auto ZG = std::make_shared<const CoeffModule>(r.alpha.module()->pullback(Phi));
    return obstruction_along(*r.N, to_Mp, G, ZG);
}

} // namespace extlab
