#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "extlab/automorphism.hpp"
#include "extlab/coeff_module.hpp"
#include "extlab/smith.hpp"

namespace extlab {

// Coordinates for an abelian subgroup A of a finite group: A is identified
// with Z/d_1 + ... + Z/d_k (d_i | d_{i+1}, all d_i >= 2).
class AbelianDecomposition {
public:
    AbelianDecomposition() = default;

    AbelianDecomposition(const FiniteGroup& G, const std::vector<int>& subgroup) {
        for (int a : subgroup)
            for (int b : subgroup)
                if (G.mul(a, b) != G.mul(b, a)) throw InternalError("subgroup is not abelian");
        auto gens = minimal_generating_set(G, subgroup);
        const std::size_t k = gens.size();
        std::vector<int> ord(k);
        for (std::size_t i = 0; i < k; ++i) ord[i] = G.element_order(gens[i]);

        // Relation lattice: every exponent vector in the box of orders that
        // evaluates to 1, plus ord_i e_i.
        auto eval = [&](const std::vector<std::int64_t>& x) {
            int y = G.identity();
            for (std::size_t i = 0; i < k; ++i) y = G.mul(y, G.power(gens[i], x[i]));
            return y;
        };
        std::vector<std::vector<std::int64_t>> rels;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::int64_t> r(k, 0);
            r[i] = ord[i];
            rels.push_back(r);
        }
        std::vector<std::vector<std::int64_t>> box;
        std::vector<std::int64_t> x(k, 0);
        for (;;) {
            box.push_back(x);
            if (eval(x) == G.identity() && std::any_of(x.begin(), x.end(), [](auto v) { return v != 0; }))
                rels.push_back(x);
            std::size_t i = k;
            while (i > 0 && x[i - 1] == ord[i - 1] - 1) x[--i] = 0;
            if (i == 0) break;
            ++x[i - 1];
        }
        Matrix<Integer> R(rels.size(), k);
        for (std::size_t r = 0; r < rels.size(); ++r)
            for (std::size_t i = 0; i < k; ++i) R(r, i) = rels[r][i];
        // Row-vector convention: x -> x V carries Z^k / rows(R) onto Z^k / rows(D).
        auto snf = smith_normal_form_exact(R, {false, false, true, true});
        const auto& V = *snf.V;
        const auto& Vinv = *snf.V_inv;
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < k; ++j) {
            Integer d = j < snf.rank ? snf.diagonal[j] : Integer(0);
            if (d == 0) throw InternalError("finite abelian group with free rank");
            if (d != 1) {
                keep.push_back(j);
                moduli_.push_back(to_int64(d));
            }
        }
        for (std::size_t j : keep) {
            std::vector<std::int64_t> e(k);
            for (std::size_t i = 0; i < k; ++i) e[i] = to_int64(floor_mod(Vinv(j, i), Integer(ord[i])));
            generators_.push_back(eval(e));
        }
        coords_.assign(G.order(), {});
        member_.assign(G.order(), 0);
        for (auto& xv : box) {
            int y = eval(xv);
            ModElement c;
            for (std::size_t t = 0; t < keep.size(); ++t) {
                Integer acc = 0;
                for (std::size_t i = 0; i < k; ++i) acc += Integer(xv[i]) * V(i, keep[t]);
                c.push_back(to_int64(floor_mod(acc, Integer(moduli_[t]))));
            }
            if (!member_[y]) {
                member_[y] = 1;
                coords_[y] = c;
            } else if (coords_[y] != c) {
                throw InternalError("inconsistent abelian coordinates");
            }
            element_[c] = y;
        }
        elements_ = subgroup;
        std::sort(elements_.begin(), elements_.end());
        if (static_cast<std::int64_t>(element_.size()) != static_cast<std::int64_t>(elements_.size()))
            throw InternalError("abelian decomposition is not a bijection");
    }

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    const std::vector<int>& generators() const { return generators_; }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int x) const { return member_[x] != 0; }

    const ModElement& coords(int x) const {
        if (!contains(x)) throw InternalError("element " + std::to_string(x) + " outside the abelian subgroup");
        return coords_[x];
    }
    int element(const ModElement& c) const { return element_.at(c); }

private:
    std::vector<std::int64_t> moduli_;
    std::vector<int> generators_;
    std::vector<int> elements_;
    std::vector<ModElement> coords_;
    std::vector<char> member_;
    std::map<ModElement, int> element_;
};

// Z(N) as a G-module, the action induced by a lift phi : G -> Aut(N) of psi.
// Inner automorphisms fix the centre, so any lift gives the same module.
struct CenterModule {
    AbelianDecomposition coords;
    CoeffModule module;
};

inline CenterModule center_module(const FiniteGroup& N, const std::vector<Automorphism>& phi) {
    CenterModule out;
    out.coords = AbelianDecomposition(N, center(N));
    const auto& d = out.coords.moduli();
    out.module = CoeffModule(0, d, static_cast<int>(phi.size()));
    const int k = static_cast<int>(d.size());
    for (std::size_t g = 0; g < phi.size(); ++g) {
        Matrix<std::int64_t> m(k, k);
        for (int j = 0; j < k; ++j) {
            int img = phi[g](out.coords.generators()[j]);
            const auto& c = out.coords.coords(img);
            for (int i = 0; i < k; ++i) m(i, j) = c[i];
        }
        out.module.set_action(static_cast<int>(g), m);
    }
    return out;
}

} // namespace extlab
