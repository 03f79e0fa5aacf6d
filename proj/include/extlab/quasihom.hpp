#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "extlab/group.hpp"
#include "extlab/integer.hpp"

namespace extlab {

// Group policies: value_type, mul, inv, identity. Domains additionally
// enumerate a word ball: finite groups return everything at every radius.

struct FiniteGroupOps {
    using value_type = int;
    const FiniteGroup* G;

    int mul(int a, int b) const { return G->mul(a, b); }
    int inv(int a) const { return G->inv(a); }
    int identity() const { return G->identity(); }

    bool finite() const { return true; }
    int radius(int) const { return 0; }
    std::vector<int> ball(int) const {
        std::vector<int> out(G->order());
        for (int a = 0; a < G->order(); ++a) out[a] = a;
        return out;
    }
};

// Z^2 with the standard generators; the word ball for the sup-norm.
using Lat2 = std::array<std::int64_t, 2>;

struct Lattice2Ops {
    using value_type = Lat2;

    Lat2 mul(const Lat2& a, const Lat2& b) const { return {checked_add(a[0], b[0]), checked_add(a[1], b[1])}; }
    Lat2 inv(const Lat2& a) const { return {-a[0], -a[1]}; }
    Lat2 identity() const { return {0, 0}; }

    bool finite() const { return false; }
    int radius(const Lat2& a) const { return static_cast<int>(std::max(std::abs(a[0]), std::abs(a[1]))); }
    std::vector<Lat2> ball(int R) const {
        std::vector<Lat2> out;
        for (std::int64_t x = -R; x <= R; ++x)
            for (std::int64_t y = -R; y <= R; ++y) out.push_back({x, y});
        return out;
    }
};

template <class Dom, class Cod>
struct SectionMap {
    using D = typename Dom::value_type;
    using C = typename Cod::value_type;

    std::string name;
    Dom dom;
    Cod cod;
    std::function<C(const D&)> f;

    C operator()(const D& g) const { return f(g); }
    bool normalized() const { return f(dom.identity()) == cod.identity(); }

    // sigma(g) sigma(h) sigma(gh)^-1
    C d(const D& g, const D& h) const { return cod.mul(cod.mul(f(g), f(h)), cod.inv(f(dom.mul(g, h)))); }
    // sigma(h)^-1 sigma(g)^-1 sigma(gh)
    C dbar(const D& g, const D& h) const {
        return cod.mul(cod.mul(cod.inv(f(h)), cod.inv(f(g))), f(dom.mul(g, h)));
    }
    // x -> sigma(g) x sigma(g)^-1
    C act(const D& g, const C& x) const { return cod.mul(cod.mul(f(g), x), cod.inv(f(g))); }
};

template <class C>
struct DefectReport {
    int window_radius = 0;
    std::vector<C> D;
    std::vector<C> Dbar;
    bool exhaustive = false;
    std::vector<std::int64_t> growth;      // |D| within radius r, r = 1..R
    std::vector<std::int64_t> growth_bar;  // |Dbar| likewise
    std::int64_t pairs = 0;

    static bool strictly_increasing(const std::vector<std::int64_t>& s) {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] <= s[i - 1]) return false;
        return true;
    }
    static bool constant(const std::vector<std::int64_t>& s) {
        return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
    }
    std::string growth_verdict() const {
        if (exhaustive) return "finite (exhaustive)";
        if (constant(growth)) return "bounded up to radius " + std::to_string(window_radius);
        return "growing at radius " + std::to_string(window_radius);
    }
};

// D and Dbar over all pairs (finite domain) or over the radius-R ball. Each
// value remembers the least radius of a pair producing it, which yields the
// growth series in one pass.
template <class Dom, class Cod>
DefectReport<typename Cod::value_type> defect(const SectionMap<Dom, Cod>& s, int R = 1,
                                              std::int64_t budget = 1'000'000) {
    using C = typename Cod::value_type;
    DefectReport<C> rep;
    rep.window_radius = R;
    rep.exhaustive = s.dom.finite();
    auto ball = s.dom.ball(R);
    const auto n = static_cast<std::int64_t>(ball.size());
    if (n > 0 && n > budget / n)
        throw WindowTooLarge(std::to_string(n) + "^2 pairs exceeds the budget of " + std::to_string(budget));
    rep.pairs = n * n;
    std::map<C, int> first, first_bar;
    for (auto& g : ball)
        for (auto& h : ball) {
            int r = std::max(s.dom.radius(g), s.dom.radius(h));
            auto note = [r](std::map<C, int>& m, const C& v) {
                auto [it, fresh] = m.emplace(v, r);
                if (!fresh && r < it->second) it->second = r;
            };
            note(first, s.d(g, h));
            note(first_bar, s.dbar(g, h));
        }
    for (auto& [v, r] : first) rep.D.push_back(v);
    for (auto& [v, r] : first_bar) rep.Dbar.push_back(v);
    const int top = rep.exhaustive ? 1 : R;
    for (int r = 1; r <= top; ++r) {
        auto count = [r](const std::map<C, int>& m) {
            return static_cast<std::int64_t>(std::count_if(m.begin(), m.end(), [r](auto& kv) { return kv.second <= r; }));
        };
        rep.growth.push_back(count(first));
        rep.growth_bar.push_back(count(first_bar));
    }
    return rep;
}

// Subgroup generated by a finite set; BudgetExceeded means no finiteness
// certificate was found, not that the group is infinite.
template <class Ops>
std::vector<typename Ops::value_type> defect_group(const Ops& ops, const std::vector<typename Ops::value_type>& D,
                                                   std::size_t budget = 10000) {
    using C = typename Ops::value_type;
    std::vector<C> gens;
    for (auto& x : D) {
        gens.push_back(x);
        gens.push_back(ops.inv(x));
    }
    std::set<C> seen{ops.identity()};
    std::vector<C> queue{ops.identity()};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (auto& s : gens) {
            C y = ops.mul(queue[k], s);
            if (seen.insert(y).second) {
                queue.push_back(y);
                if (seen.size() > budget)
                    throw BudgetExceeded("defect group closure exceeds " + std::to_string(budget) + " elements");
            }
        }
    return {seen.begin(), seen.end()};
}

template <class D>
struct IdentityVerdict {
    bool holds = true;
    std::int64_t checked = 0;
    std::optional<std::array<D, 3>> witness;
};

// act(g, d(h,i)) d(g,hi) = d(g,h) d(gh,i) on the given triples. The defect
// and action are passed separately so a corrupted table can be checked.
template <class Dom, class Cod>
IdentityVerdict<typename Dom::value_type> check_qhm_identity(
    const Dom& dom, const Cod& cod, const std::vector<std::array<typename Dom::value_type, 3>>& triples,
    const std::function<typename Cod::value_type(const typename Dom::value_type&, const typename Dom::value_type&)>& d,
    const std::function<typename Cod::value_type(const typename Dom::value_type&, const typename Cod::value_type&)>& act) {
    IdentityVerdict<typename Dom::value_type> v;
    for (auto& [g, h, i] : triples) {
        ++v.checked;
        auto lhs = cod.mul(act(g, d(h, i)), d(g, dom.mul(h, i)));
        auto rhs = cod.mul(d(g, h), d(dom.mul(g, h), i));
        if (!(lhs == rhs)) {
            v.holds = false;
            v.witness = std::array<typename Dom::value_type, 3>{g, h, i};
            return v;
        }
    }
    return v;
}

template <class Dom, class Cod>
IdentityVerdict<typename Dom::value_type> check_qhm_identity(
    const SectionMap<Dom, Cod>& s, const std::vector<std::array<typename Dom::value_type, 3>>& triples) {
    using D = typename Dom::value_type;
    using C = typename Cod::value_type;
    return check_qhm_identity<Dom, Cod>(
        s.dom, s.cod, triples, [&](const D& g, const D& h) { return s.d(g, h); },
        [&](const D& g, const C& x) { return s.act(g, x); });
}

// All triples when the domain is finite and small, otherwise `count` triples
// drawn from the radius-R ball.
template <class Dom>
std::vector<std::array<typename Dom::value_type, 3>> sample_triples(const Dom& dom, int R, std::int64_t count,
                                                                    std::uint64_t seed) {
    auto ball = dom.ball(R);
    std::vector<std::array<typename Dom::value_type, 3>> out;
    const auto n = static_cast<std::int64_t>(ball.size());
    if (dom.finite() && n * n * n <= count) {
        for (auto& g : ball)
            for (auto& h : ball)
                for (auto& i : ball) out.push_back({g, h, i});
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (std::int64_t t = 0; t < count; ++t) out.push_back({ball[pick(rng)], ball[pick(rng)], ball[pick(rng)]});
    return out;
}

// sigma~(1) = 1, sigma~ = sigma elsewhere.
template <class Dom, class Cod>
SectionMap<Dom, Cod> normalize_at_identity(const SectionMap<Dom, Cod>& s) {
    SectionMap<Dom, Cod> out = s;
    out.name = s.name + "~";
    auto f = s.f;
    auto dom = s.dom;
    auto cod = s.cod;
    out.f = [f, dom, cod](const typename Dom::value_type& g) {
        return g == dom.identity() ? cod.identity() : f(g);
    };
    return out;
}

template <class C>
struct ContainmentReport {
    bool holds = true;
    std::vector<C> extra;  // elements of D(sigma~) outside D(sigma) + {1}
};

// Checks D(sigma~) is contained in D(sigma) + {1} on the window.
template <class Dom, class Cod>
ContainmentReport<typename Cod::value_type> normalization_containment(const SectionMap<Dom, Cod>& s, int R = 1,
                                                                      std::int64_t budget = 1'000'000) {
    auto t = normalize_at_identity(s);
    auto d = defect(s, R, budget);
    auto dt = defect(t, R, budget);
    std::set<typename Cod::value_type> allowed(d.D.begin(), d.D.end());
    allowed.insert(s.cod.identity());
    ContainmentReport<typename Cod::value_type> rep;
    for (auto& x : dt.D)
        if (!allowed.count(x)) {
            rep.holds = false;
            rep.extra.push_back(x);
        }
    return rep;
}

// Number of distinct maps x -> sigma(g) x sigma(g)^-1 on the probe elements,
// over g in the radius-R ball.
template <class Dom, class Cod>
std::size_t count_conjugation_actions(const SectionMap<Dom, Cod>& s, int R,
                                      const std::vector<typename Cod::value_type>& probes) {
    std::set<std::vector<typename Cod::value_type>> seen;
    for (auto& g : s.dom.ball(R)) {
        std::vector<typename Cod::value_type> img;
        for (auto& p : probes) img.push_back(s.act(g, p));
        seen.insert(std::move(img));
    }
    return seen.size();
}

} // namespace extlab
