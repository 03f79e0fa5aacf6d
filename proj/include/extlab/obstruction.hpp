#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extlab/extension.hpp"

namespace extlab {

// Least zeta(g, h) with conj_zeta = phi(g) phi(h) phi(gh)^-1, identity on
// the first row and column.
inline std::vector<int> build_zeta(const FiniteGroup& G, const AutTower& tower, const std::vector<Automorphism>& phi) {
    const auto& N = tower.N();
    std::vector<int> zeta(static_cast<std::size_t>(G.order()) * G.order(), N.identity());
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            auto a = compose(compose(phi[g], phi[h]), inverse(phi[G.mul(g, h)]));
            if (g == G.identity() || h == G.identity()) {
                if (a != identity_automorphism(N)) throw NotInner("phi(1) is not the identity");
                continue;
            }
            int n = tower.inner_witness(a);
            if (n < 0)
                throw NotInner("phi(" + std::to_string(g) + ")phi(" + std::to_string(h) + ")phi(gh)^-1 is not inner");
            zeta[static_cast<std::size_t>(g) * G.order() + h] = n;
        }
    return zeta;
}

// o(g,h,i) = [phi(g)(zeta(h,i)) zeta(g,hi)] [zeta(g,h) zeta(gh,i)]^-1 as an
// element of N; the caller checks it is central.
inline int obstruction_value(const FiniteGroup& G, const FiniteGroup& N, const std::vector<Automorphism>& phi,
                             const std::vector<int>& zeta, int g, int h, int i) {
    auto z = [&](int a, int b) { return zeta[static_cast<std::size_t>(a) * G.order() + b]; };
    int lhs = N.mul(phi[g](z(h, i)), z(g, G.mul(h, i)));
    int rhs = N.mul(z(g, h), z(G.mul(g, h), i));
    return N.mul(lhs, N.inv(rhs));
}

struct ObstructionTrial {
    std::uint64_t seed;
    bool class_equal;
};

struct ObstructionResult {
    GroupPtr G;
    TowerPtr tower;
    OuterMap psi;
    std::vector<Automorphism> phi;
    std::vector<int> zeta;
    CenterModule center;
    ModulePtr Zm;
    Cochain o_b;                  // normalized 3-cocycle with values in Z(N)
    std::vector<std::int64_t> h3_factors;
    std::vector<std::int64_t> class_coords;
    std::optional<Cochain> class_zero;  // beta with delta beta = o_b
    std::vector<ObstructionTrial> trials;
    bool central = true, cocycle = true, degenerate_zero = true;

    bool vanishes() const { return class_zero.has_value(); }
    bool trials_agree() const {
        for (auto& t : trials)
            if (!t.class_equal) return false;
        return true;
    }
};

namespace detail {

// o_b as a full (unnormalized) cochain, so the degeneracy claim is tested
// rather than assumed.
inline Cochain obstruction_cochain(const GroupPtr& G, const FiniteGroup& N, const CenterModule& Z, const ModulePtr& Zm,
                                   const std::vector<Automorphism>& phi, const std::vector<int>& zeta) {
    Cochain o(G, Zm, 3, false);
    for (std::int64_t c = 0; c < o.cells(); ++c) {
        auto t = o.tuple_of(c);
        int v = obstruction_value(*G, N, phi, zeta, t[0], t[1], t[2]);
        if (!Z.coords.contains(v))
            throw InternalError("obstruction value at (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + ") is not central");
        o.set_cell(c, Z.coords.coords(v));
    }
    return o;
}

} // namespace detail

struct ObstructionOptions {
    int trials = 20;
    std::uint64_t seed = 0;
};

inline ObstructionResult obstruction(GroupPtr G, const OuterMap& psi, ObstructionOptions opts = {}) {
    ObstructionResult r;
    r.G = G;
    r.tower = psi.tower;
    r.psi = psi;
    require_homomorphism(*G, psi.tower->out_group(), psi.images);
    const auto& N = psi.target();
    r.phi = canonical_lift(*G, psi);
    r.zeta = build_zeta(*G, *psi.tower, r.phi);
    r.center = center_module(N, r.phi);
    r.Zm = std::make_shared<const CoeffModule>(r.center.module);
    r.Zm->validate(*G);

    auto full = detail::obstruction_cochain(G, N, r.center, r.Zm, r.phi, r.zeta);
    r.degenerate_zero = full.is_degenerate_free();
    r.cocycle = coboundary(full).is_zero();
    if (!r.degenerate_zero) throw InternalError("obstruction is nonzero on a degenerate triple");
    if (!r.cocycle) throw InternalError("obstruction is not a cocycle");
    r.o_b = full.as_normalized();

    CohomologyGroup H3(G, r.Zm, 3, CohomologyOptions{});
    r.h3_factors = H3.invariant_factors_int();
    for (auto& v : H3.class_of(r.o_b)) r.class_coords.push_back(to_int64(v));
    r.class_zero = H3.witness(r.o_b);

    // Re-choices: phi'(g) = conj_{nu(g)} phi(g), zeta' = least choice for phi'
    // times a random central element.
    const auto& zc = r.center.coords.elements();
    for (int t = 0; t < opts.trials; ++t) {
        std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(t);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pickn(0, N.order() - 1);
        std::uniform_int_distribution<std::size_t> pickz(0, zc.size() - 1);
        std::vector<Automorphism> phi2 = r.phi;
        for (int g = 0; g < G->order(); ++g)
            if (g != G->identity()) phi2[g] = compose(conjugation(N, pickn(rng)), r.phi[g]);
        auto zeta2 = build_zeta(*G, *psi.tower, phi2);
        for (int g = 0; g < G->order(); ++g)
            for (int h = 0; h < G->order(); ++h)
                if (g != G->identity() && h != G->identity()) {
                    auto& z = zeta2[static_cast<std::size_t>(g) * G->order() + h];
                    z = N.mul(z, zc[pickz(rng)]);
                }
        auto o2 = detail::obstruction_cochain(G, N, r.center, r.Zm, phi2, zeta2);
        if (!coboundary(o2).is_zero()) throw InternalError("re-chosen obstruction is not a cocycle");
        r.trials.push_back({seed, H3.class_equal(r.o_b, o2.as_normalized())});
    }
    return r;
}

// e = zeta * beta^-1 for a vanishing obstruction.
inline NonAbelianCocycle cocycle_from_obstruction(const ObstructionResult& r) {
    if (!r.class_zero) throw InternalError("obstruction does not vanish");
    const auto& G = *r.G;
    const auto& N = r.tower->N();
    NonAbelianCocycle c{r.G, r.tower, r.zeta, r.phi};
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            int b = r.center.coords.element(r.class_zero->at(std::vector<int>{g, h}));
            auto& e = c.e[static_cast<std::size_t>(g) * G.order() + h];
            e = N.mul(e, N.inv(b));
        }
    return c;
}

struct ExtensionClass {
    NonAbelianCocycle cocycle;
    Extension extension;
    std::vector<std::int64_t> class_coords;  // of e * e_0^-1 in H^2(G, Z(N))
};

struct EnumerationResult {
    std::vector<ExtensionClass> classes;
    std::int64_t candidates = 0;
    std::int64_t valid = 0;
    std::vector<NonAbelianCocycle> valid_cocycles;
};

// All normalized e with e(g,h) in zeta(g,h) Z(N) for the canonical lift,
// validated and bucketed by equivalence.
inline EnumerationResult enumerate_extensions(GroupPtr G, const OuterMap& psi, std::int64_t budget = 10'000'000) {
    const auto& N = psi.target();
    auto phi = canonical_lift(*G, psi);
    auto zeta = build_zeta(*G, *psi.tower, phi);
    auto Zc = center(N);
    std::vector<std::pair<int, int>> cells;
    for (int g = 0; g < G->order(); ++g)
        for (int h = 0; h < G->order(); ++h)
            if (g != G->identity() && h != G->identity()) cells.push_back({g, h});
    std::int64_t total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        total = checked_mul(total, static_cast<std::int64_t>(Zc.size()));
        if (total > budget) throw BudgetExceeded("more than " + std::to_string(budget) + " candidate e-tables");
    }
    EnumerationResult out;
    out.candidates = total;
    std::optional<EquivalenceSolver> solver;
    std::vector<std::size_t> digit(cells.size(), 0);
    for (std::int64_t k = 0; k < total; ++k) {
        NonAbelianCocycle c{G, psi.tower, zeta, phi};
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto [g, h] = cells[i];
            auto& e = c.e[static_cast<std::size_t>(g) * G->order() + h];
            e = N.mul(e, Zc[digit[i]]);
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (++digit[i] < Zc.size()) break;
            digit[i] = 0;
        }
        if (!validate_nonabelian_cocycle(c)) continue;
        ++out.valid;
        if (!solver) solver.emplace(G, phi, N);
        bool found = false;
        for (auto& cls : out.classes)
            if (solver->witness(c, cls.cocycle)) {
                found = true;
                break;
            }
        if (!found) {
            std::vector<std::int64_t> coords;
            if (!out.classes.empty()) coords = solver->class_of(c, out.classes.front().cocycle);
            out.classes.push_back({c, build_extension(c), coords});
        }
        out.valid_cocycles.push_back(std::move(c));
    }
    return out;
}

inline NonAbelianCocycle twist_cocycle(const Cochain& alpha, const NonAbelianCocycle& base, const CenterModule& Z) {
    NonAbelianCocycle c = base;
    const auto& G = *base.G;
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            auto& e = c.e[static_cast<std::size_t>(g) * G.order() + h];
            e = base.N().mul(Z.coords.element(alpha.at(std::vector<int>{g, h})), e);
        }
    return c;
}

// Psi([alpha]) = E(alpha . e_0, phi)
inline Extension psi_bijection(const Cochain& alpha, const NonAbelianCocycle& base, const CenterModule& Z) {
    if (!coboundary(alpha).is_zero()) throw NotACocycle("alpha is not a 2-cocycle");
    auto ext = build_extension(twist_cocycle(alpha, base, Z));
    ext.provenance = "psi-bijection";
    return ext;
}

} // namespace extlab
