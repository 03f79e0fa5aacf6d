#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extlab/abelian.hpp"
#include "extlab/automorphism.hpp"
#include "extlab/cohomology.hpp"

namespace extlab {

using TowerPtr = std::shared_ptr<const AutTower>;

// (e, phi) over (G, N, psi). e is stored row-major: e[g * |G| + h].
struct NonAbelianCocycle {
    GroupPtr G;
    TowerPtr tower;  // carries N
    std::vector<int> e;
    std::vector<Automorphism> phi;

    const FiniteGroup& N() const { return tower->N(); }
    int e_at(int g, int h) const { return e[static_cast<std::size_t>(g) * G->order() + h]; }
    OuterMap psi() const { return project_to_out(*G, tower, phi); }
};

struct CocycleVerdict {
    bool ok = true;
    std::string condition;  // "shape", "i", "ii", "iii"
    std::vector<int> witness;
    std::string detail;

    explicit operator bool() const { return ok; }
};

inline CocycleVerdict validate_nonabelian_cocycle(const NonAbelianCocycle& c) {
    const auto& G = *c.G;
    const auto& N = c.N();
    const int n = G.order();
    auto fail = [](std::string cond, std::vector<int> w, std::string detail) {
        return CocycleVerdict{false, std::move(cond), std::move(w), std::move(detail)};
    };
    if (static_cast<int>(c.e.size()) != n * n || static_cast<int>(c.phi.size()) != n)
        return fail("shape", {}, "table sizes do not match |G|");
    for (int v : c.e)
        if (v < 0 || v >= N.order()) return fail("shape", {}, "e value out of range");
    for (int g = 0; g < n; ++g)
        if (!is_automorphism(N, c.phi[g])) return fail("shape", {g}, "phi(g) is not an automorphism");

    // (i)
    if (c.phi[G.identity()] != identity_automorphism(N)) return fail("i", {G.identity()}, "phi(1) != id");
    for (int g = 0; g < n; ++g) {
        if (c.e_at(G.identity(), g) != N.identity()) return fail("i", {G.identity(), g}, "e(1,g) != 1");
        if (c.e_at(g, G.identity()) != N.identity()) return fail("i", {g, G.identity()}, "e(g,1) != 1");
    }
    std::vector<int> images(n);
    for (int g = 0; g < n; ++g) images[g] = c.tower->coset_of(c.phi[g]);
    if (!is_homomorphism(G, c.tower->out_group(), images)) return fail("i", {}, "phi does not project to a homomorphism");
    // (ii)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            auto rhs = compose(compose(c.phi[g], c.phi[h]), inverse(c.phi[G.mul(g, h)]));
            if (conjugation(N, c.e_at(g, h)) != rhs) return fail("ii", {g, h}, "conj e(g,h) != phi(g)phi(h)phi(gh)^-1");
        }
    // (iii)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int i = 0; i < n; ++i) {
                int lhs = N.mul(c.phi[g](c.e_at(h, i)), c.e_at(g, G.mul(h, i)));
                int rhs = N.mul(c.e_at(g, h), c.e_at(G.mul(g, h), i));
                if (lhs != rhs) return fail("iii", {g, h, i}, "phi(g)e(h,i) e(g,hi) != e(g,h) e(gh,i)");
            }
    return {};
}

// 1 -> N -> E -> G -> 1 with a distinguished section.
struct Extension {
    GroupPtr G;
    TowerPtr tower;
    FiniteGroup E;
    std::vector<int> iota;   // N -> E
    std::vector<int> pi;     // E -> G
    std::vector<int> sigma;  // G -> E
    std::string provenance;

    const FiniteGroup& N() const { return tower->N(); }

    int iota_inv(int x) const {
        auto it = std::find(iota.begin(), iota.end(), x);
        return it == iota.end() ? -1 : static_cast<int>(it - iota.begin());
    }
};

inline void check_exactness(const Extension& ext) {
    const auto& N = ext.N();
    require_homomorphism(N, ext.E, ext.iota);
    require_homomorphism(ext.E, *ext.G, ext.pi);
    std::vector<int> sorted = ext.iota;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InternalError("iota not injective");
    std::vector<char> hit(ext.G->order(), 0);
    for (int x = 0; x < ext.E.order(); ++x) hit[ext.pi[x]] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw InternalError("pi not surjective");
    std::vector<int> ker;
    for (int x = 0; x < ext.E.order(); ++x)
        if (ext.pi[x] == ext.G->identity()) ker.push_back(x);
    if (ker != sorted) throw InternalError("image of iota differs from kernel of pi");
    if (ext.E.order() != N.order() * ext.G->order()) throw InternalError("|E| != |N||G|");
}

// E on N x G, (n1, g1)(n2, g2) = (n1 phi(g1)(n2) e(g1, g2), g1 g2). The pair
// (n, g) has index g * |N| + n.
inline Extension build_extension(const NonAbelianCocycle& c) {
    auto v = validate_nonabelian_cocycle(c);
    if (!v) throw InvalidCocycle("condition (" + v.condition + "): " + v.detail);
    const auto& G = *c.G;
    const auto& N = c.N();
    const int nn = N.order(), ng = G.order();
    std::vector<std::vector<int>> t(nn * ng, std::vector<int>(nn * ng));
    for (int x = 0; x < nn * ng; ++x)
        for (int y = 0; y < nn * ng; ++y) {
            int n1 = x % nn, g1 = x / nn, n2 = y % nn, g2 = y / nn;
            int n = N.mul(N.mul(n1, c.phi[g1](n2)), c.e_at(g1, g2));
            t[x][y] = G.mul(g1, g2) * nn + n;
        }
    Extension ext;
    ext.G = c.G;
    ext.tower = c.tower;
    ext.E = make_group(t, "E");
    for (int n = 0; n < nn; ++n) ext.iota.push_back(G.identity() * nn + n);
    for (int x = 0; x < nn * ng; ++x) ext.pi.push_back(x / nn);
    for (int g = 0; g < ng; ++g) ext.sigma.push_back(g * nn + N.identity());
    ext.provenance = "cocycle";
    check_exactness(ext);
    return ext;
}

// phi_sigma(g) : n -> iota^-1(sigma(g) iota(n) sigma(g)^-1)
inline std::vector<Automorphism> phi_sigma(const Extension& ext, const std::vector<int>& sigma) {
    std::vector<Automorphism> phi(ext.G->order());
    for (int g = 0; g < ext.G->order(); ++g) {
        phi[g].perm.resize(ext.N().order());
        for (int n = 0; n < ext.N().order(); ++n) {
            int m = ext.iota_inv(ext.E.conj(sigma[g], ext.iota[n]));
            if (m < 0) throw ConjugationEscapesN("sigma(" + std::to_string(g) + ") conjugates N outside N");
            phi[g].perm[n] = m;
        }
    }
    return phi;
}

inline void require_section(const Extension& ext, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != ext.G->order()) throw NotASection("section has wrong length");
    for (int g = 0; g < ext.G->order(); ++g)
        if (sigma[g] < 0 || sigma[g] >= ext.E.order() || ext.pi[sigma[g]] != g)
            throw NotASection("pi(sigma(" + std::to_string(g) + ")) != " + std::to_string(g));
    if (sigma[ext.G->identity()] != ext.E.identity()) throw NotASection("sigma(1) != 1; normalize first");
}

// e_sigma(g, h) = iota^-1(sigma(g) sigma(h) sigma(gh)^-1), phi_sigma as above.
inline NonAbelianCocycle cocycle_of_section(const Extension& ext, const std::vector<int>& sigma) {
    require_section(ext, sigma);
    const auto& G = *ext.G;
    NonAbelianCocycle c;
    c.G = ext.G;
    c.tower = ext.tower;
    c.phi = phi_sigma(ext, sigma);
    c.e.resize(static_cast<std::size_t>(G.order()) * G.order());
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            int d = ext.E.mul(ext.E.mul(sigma[g], sigma[h]), ext.E.inv(sigma[G.mul(g, h)]));
            int n = ext.iota_inv(d);
            if (n < 0) throw NotASection("defect outside iota(N)");
            c.e[static_cast<std::size_t>(g) * G.order() + h] = n;
        }
    auto v = validate_nonabelian_cocycle(c);
    if (!v) throw InternalError("extracted cocycle fails condition (" + v.condition + ")");
    return c;
}

// sigma'(g) = iota(nu(g)) sigma(g) with the least nu(g) such that
// conj_{nu(g)} . phi_sigma(g) = target(g).
inline std::vector<int> section_with_phi(const Extension& ext, const std::vector<Automorphism>& target) {
    const auto& G = *ext.G;
    const auto& N = ext.N();
    auto base = phi_sigma(ext, ext.sigma);
    std::vector<int> out(G.order());
    for (int g = 0; g < G.order(); ++g) {
        if (g == G.identity()) {
            if (target[g] != identity_automorphism(N)) throw NoLift("target phi(1) is not the identity");
            out[g] = ext.sigma[g];
            continue;
        }
        int nu = -1;
        for (int n = 0; n < N.order() && nu < 0; ++n)
            if (compose(conjugation(N, n), base[g]) == target[g]) nu = n;
        if (nu < 0) throw NoLift("target phi(" + std::to_string(g) + ") is not in the coset of the extension's psi");
        out[g] = ext.E.mul(ext.iota[nu], ext.sigma[g]);
    }
    return out;
}

// psi from the distinguished section, re-derived from a seeded alternate
// section and required to agree.
inline OuterMap induced_psi(const Extension& ext, std::uint64_t seed = 0) {
    const auto& G = *ext.G;
    auto psi = project_to_out(G, ext.tower, phi_sigma(ext, ext.sigma));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, ext.N().order() - 1);
    std::vector<int> alt = ext.sigma;
    for (int g = 0; g < G.order(); ++g)
        if (g != G.identity()) alt[g] = ext.E.mul(ext.iota[pick(rng)], ext.sigma[g]);
    auto psi2 = project_to_out(G, ext.tower, phi_sigma(ext, alt));
    if (psi.images != psi2.images) throw InternalError("psi depends on the section");
    return psi;
}

// Z(N)-valued normalized 2-cochain g, h -> a(g, h) b(g, h)^-1 for two
// e-tables whose quotient is central.
inline Cochain central_quotient(const GroupPtr& G, const CenterModule& Z, const ModulePtr& Zm,
                                const std::vector<int>& a, const std::vector<int>& b, const FiniteGroup& N) {
    Cochain c(G, Zm, 2, true);
    for (std::int64_t cell = 0; cell < c.cells(); ++cell) {
        auto t = c.tuple_of(cell);
        std::size_t k = static_cast<std::size_t>(t[0]) * G->order() + t[1];
        int q = N.mul(a[k], N.inv(b[k]));
        if (!Z.coords.contains(q)) throw InternalError("e-tables do not differ by a central element");
        c.set_cell(cell, Z.coords.coords(q));
    }
    return c;
}

// Decides equivalence of two cocycles with a common phi; the witness z
// satisfies e1(g,h) = (delta z)(g,h) e2(g,h) and gives the isomorphism
// (n, g) -> (n z(g), g) from E(e1) to E(e2).
class EquivalenceSolver {
public:
    EquivalenceSolver(GroupPtr G, const std::vector<Automorphism>& phi, const FiniteGroup& N)
        : G_(G), N_(N), phi_(phi), Z_(center_module(N, phi)) {
        Zm_ = std::make_shared<const CoeffModule>(Z_.module);
        H2_.emplace(G_, Zm_, 2, CohomologyOptions{});
    }

    const CenterModule& center() const { return Z_; }
    const ModulePtr& module() const { return Zm_; }
    const CohomologyGroup& h2() const { return *H2_; }

    // z as elements of N (z(1) = 1), or nothing.
    std::optional<std::vector<int>> witness(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2) const {
        if (c1.phi != phi_ || c2.phi != phi_) throw DifferentPhi("cocycles carry different phi tables");
        auto c = central_quotient(G_, Z_, Zm_, c1.e, c2.e, N_);
        auto b = H2_->witness(c);
        if (!b) return std::nullopt;
        std::vector<int> z(G_->order());
        for (int g = 0; g < G_->order(); ++g) z[g] = Z_.coords.element(b->at(std::vector<int>{g}));
        return z;
    }

    std::vector<std::int64_t> class_of(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2) const {
        auto c = central_quotient(G_, Z_, Zm_, c1.e, c2.e, N_);
        std::vector<std::int64_t> out;
        for (auto& v : H2_->class_of(c)) out.push_back(to_int64(v));
        return out;
    }

private:
    GroupPtr G_;
    FiniteGroup N_;
    std::vector<Automorphism> phi_;
    CenterModule Z_;
    ModulePtr Zm_;
    std::optional<CohomologyGroup> H2_;
};

inline std::optional<std::vector<int>> equivalent(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2) {
    if (c1.phi != c2.phi) throw DifferentPhi("cocycles carry different phi tables");
    return EquivalenceSolver(c1.G, c1.phi, c1.N()).witness(c1, c2);
}

// Checks that (n, g) -> (n z(g), g) is an isomorphism E1 -> E2 commuting with
// iota and pi.
inline bool verify_equivalence_map(const Extension& e1, const Extension& e2, const std::vector<int>& z) {
    const int nn = e1.N().order();
    std::vector<int> f(e1.E.order());
    for (int x = 0; x < e1.E.order(); ++x) {
        int n = x % nn, g = x / nn;
        f[x] = g * nn + e1.N().mul(n, z[g]);
    }
    if (!is_homomorphism(e1.E, e2.E, f)) return false;
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    for (int n = 0; n < nn; ++n)
        if (f[e1.iota[n]] != e2.iota[n]) return false;
    for (int x = 0; x < e1.E.order(); ++x)
        if (e2.pi[f[x]] != e1.pi[x]) return false;
    return true;
}

struct BoundednessVerdict {
    std::string verdict;  // "bounded", "not bounded", "unknown"
    std::string certificate;
};

inline BoundednessVerdict is_bounded_extension(const Extension&) {
    return {"bounded", "finite: every section has finite defect and phi_sigma has finite image"};
}

} // namespace extlab
