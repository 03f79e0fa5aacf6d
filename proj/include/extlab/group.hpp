#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "extlab/error.hpp"

namespace extlab {

// Finite group stored as a multiplication table over element indices.
class FiniteGroup {
public:
    FiniteGroup() = default;

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conj(int a, int x) const { return mul(mul(a, x), inv(a)); } // a x a^-1
    const std::string& name() const { return name_; }
    bool associativity_exhaustive() const { return exhaustive_; }

    std::vector<int> row(int a) const {
        return {table_.begin() + static_cast<std::ptrdiff_t>(a) * n_,
                table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * n_};
    }
    std::vector<std::vector<int>> table() const {
        std::vector<std::vector<int>> t;
        for (int a = 0; a < n_; ++a) t.push_back(row(a));
        return t;
    }

    int element_order(int a) const {
        int k = 1;
        for (int x = a; x != identity_; x = mul(x, a)) ++k;
        return k;
    }

    int power(int a, std::int64_t k) const {
        int m = element_order(a);
        k %= m;
        if (k < 0) k += m;
        int x = identity_;
        for (std::int64_t i = 0; i < k; ++i) x = mul(x, a);
        return x;
    }

    // Non-identity elements in index order; used for normalized cochains.
    std::vector<int> nonidentity() const {
        std::vector<int> out;
        for (int a = 0; a < n_; ++a)
            if (a != identity_) out.push_back(a);
        return out;
    }

    bool is_abelian() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    friend FiniteGroup make_group(const std::vector<std::vector<int>>& table, std::string name);

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    int n_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::string name_;
    bool exhaustive_ = true;
};

inline FiniteGroup make_group(const std::vector<std::vector<int>>& table, std::string name = "") {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    FiniteGroup g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw NotAGroup("row " + std::to_string(a) + " has length " + std::to_string(table[a].size()));
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw NotAGroup("entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
            g.table_[static_cast<std::size_t>(a) * n + b] = v;
        }
    }
    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int b = 0; b < n; ++b) {
            if (seen_row[g.mul(a, b)]++) throw NotAGroup("row " + std::to_string(a) + " repeats an element");
            if (seen_col[g.mul(b, a)]++) throw NotAGroup("column " + std::to_string(a) + " repeats an element");
        }
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = g.mul(a, b) == b && g.mul(b, a) == b;
        if (ok) e = a;
    }
    if (e < 0) throw NotAGroup("no two-sided identity");
    g.identity_ = e;
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == e) g.inverse_[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse_[a] < 0 || g.mul(g.inverse_[a], a) != e)
            throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");

    auto check = [&](int a, int b, int c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw NotAGroup("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        g.exhaustive_ = false;
        std::mt19937_64 rng(0);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 100000; ++t) check(pick(rng), pick(rng), pick(rng));
    }
    return g;
}

// Subgroup generated by gens, as a sorted list of indices.
inline std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> out{G.identity()};
    in[G.identity()] = 1;
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int s : gens) {
            int y = G.mul(out[k], s);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> center(const FiniteGroup& G) {
    std::vector<int> out;
    for (int a = 0; a < G.order(); ++a) {
        bool central = true;
        for (int b = 0; b < G.order() && central; ++b) central = G.mul(a, b) == G.mul(b, a);
        if (central) out.push_back(a);
    }
    return out;
}

// Smallest generating set of the subgroup spanned by `within`, found by
// trying all subsets in increasing size. Lexicographically least among those.
inline std::vector<int> minimal_generating_set(const FiniteGroup& G, std::vector<int> within) {
    std::sort(within.begin(), within.end());
    auto target = closure(G, within);
    std::vector<int> cand;
    for (int x : target)
        if (x != G.identity()) cand.push_back(x);
    if (cand.empty()) return {};
    for (std::size_t k = 1; k <= cand.size(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<int> gens;
            for (auto i : idx) gens.push_back(cand[i]);
            if (closure(G, gens).size() == target.size()) return gens;
            std::size_t p = k;
            while (p > 0 && idx[p - 1] == cand.size() - k + p - 1) --p;
            if (p == 0) break;
            ++idx[p - 1];
            for (std::size_t i = p; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return cand;
}

inline std::vector<int> minimal_generating_set(const FiniteGroup& G) {
    std::vector<int> all(G.order());
    for (int a = 0; a < G.order(); ++a) all[a] = a;
    return minimal_generating_set(G, all);
}

inline bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != G.order()) return false;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return false;
    return true;
}

inline void require_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != G.order())
        throw NotAHomomorphism("map has " + std::to_string(f.size()) + " entries, expected " +
                               std::to_string(G.order()));
    for (int v : f)
        if (v < 0 || v >= H.order()) throw NotAHomomorphism("image index out of range");
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (f[G.mul(a, b)] != H.mul(f[a], f[b]))
                throw NotAHomomorphism("f(" + std::to_string(a) + "*" + std::to_string(b) +
                                       ") != f(" + std::to_string(a) + ")f(" + std::to_string(b) + ")");
}

// All homomorphisms G -> H, by backtracking over images of a minimal
// generating set of G; sorted lexicographically.
inline std::vector<std::vector<int>> homomorphisms(const FiniteGroup& G, const FiniteGroup& H) {
    auto gens = minimal_generating_set(G);
    std::vector<std::vector<int>> out;
    std::vector<int> img(gens.size());
    auto extend = [&]() -> std::vector<int> {
        // Spread images along a BFS over generator words; fail on conflict.
        std::vector<int> f(G.order(), -1);
        f[G.identity()] = H.identity();
        std::vector<int> queue{G.identity()};
        for (std::size_t k = 0; k < queue.size(); ++k) {
            int x = queue[k];
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int y = G.mul(x, gens[i]);
                int fy = H.mul(f[x], img[i]);
                if (f[y] < 0) {
                    f[y] = fy;
                    queue.push_back(y);
                } else if (f[y] != fy) {
                    return {};
                }
            }
        }
        if (!is_homomorphism(G, H, f)) return {};
        return f;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == gens.size()) {
            auto f = extend();
            if (!f.empty()) out.push_back(std::move(f));
            return;
        }
        int ord = G.element_order(gens[i]);
        for (int h = 0; h < H.order(); ++h) {
            if (ord % H.element_order(h) != 0) continue;
            img[i] = h;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Built-in groups.

inline FiniteGroup cyclic_group(int n) {
    if (n < 1) throw NotAGroup("cyclic group of order " + std::to_string(n));
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return make_group(t, "Z/" + std::to_string(n));
}

// Element (a, b) has index a * |B| + b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, std::string name = "") {
    const int na = A.order(), nb = B.order();
    std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y)
            t[x][y] = A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
    if (name.empty()) name = A.name() + "x" + B.name();
    return make_group(t, name);
}

using Permutation = std::vector<int>;

// Closure of permutation generators (images of 0..deg-1). Elements are sorted
// lexicographically, so the identity permutation is element 0.
inline FiniteGroup permutation_group(const std::vector<Permutation>& gens, std::string name = "",
                                     std::size_t budget = 10000) {
    std::size_t deg = 0;
    for (auto& p : gens) deg = std::max(deg, p.size());
    auto pad = [&](Permutation p) {
        for (std::size_t i = p.size(); i < deg; ++i) p.push_back(static_cast<int>(i));
        return p;
    };
    std::vector<Permutation> g;
    for (auto& p : gens) {
        auto q = pad(p);
        auto s = q;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < deg; ++i)
            if (s[i] != static_cast<int>(i)) throw ParseError("generator is not a permutation");
        g.push_back(q);
    }
    Permutation id(deg);
    for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
    auto compose = [&](const Permutation& a, const Permutation& b) {  // a after b
        Permutation r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = a[b[i]];
        return r;
    };
    std::map<Permutation, int> seen{{id, 0}};
    std::vector<Permutation> elems{id};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (auto& s : g) {
            auto y = compose(elems[k], s);
            if (seen.emplace(y, 0).second) {
                elems.push_back(y);
                if (elems.size() > budget) throw BudgetExceeded("permutation closure exceeds " + std::to_string(budget));
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) seen[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = seen.at(compose(elems[a], elems[b]));
    return make_group(t, name);
}

// Generators given in cycle notation, e.g. {{0,1,2},{3,4}}.
inline Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles) {
    int deg = 0;
    for (auto& c : cycles)
        for (int x : c) {
            if (x < 0) throw ParseError("negative point in cycle");
            deg = std::max(deg, x + 1);
        }
    Permutation p(deg);
    for (int i = 0; i < deg; ++i) p[i] = i;
    std::vector<char> used(deg, 0);
    for (auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (used[c[i]]++) throw ParseError("point repeated in cycles");
            p[c[i]] = c[(i + 1) % c.size()];
        }
    return p;
}

inline FiniteGroup klein_group() { return direct_product(cyclic_group(2), cyclic_group(2), "Z/2xZ/2"); }

inline FiniteGroup symmetric3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}, "S3"); }

// Symmetries of the square, order 8.
inline FiniteGroup dihedral4() { return permutation_group({{1, 2, 3, 0}, {3, 2, 1, 0}}, "D4"); }

// Elements 1, i, j, k, -1, -i, -j, -k as indices 0..7.
inline FiniteGroup quaternion8() {
    // unit products: sign and unit of u*v for u, v in {1, i, j, k}
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int u = a % 4, v = b % 4;
            int s = (a / 4 + b / 4 + sign[u][v]) % 2;
            t[a][b] = s * 4 + unit[u][v];
        }
    return make_group(t, "Q8");
}

// Names accepted by the CLI: trivial, cyclic:n, Z/n, klein, Z/2xZ/2, S3, D4, Q8.
inline FiniteGroup builtin_group(const std::string& spec) {
    if (spec == "trivial") return cyclic_group(1);
    if (spec == "klein" || spec == "Z/2xZ/2" || spec == "V4") return klein_group();
    if (spec == "S3") return symmetric3();
    if (spec == "D4") return dihedral4();
    if (spec == "Q8") return quaternion8();
    std::string digits;
    if (spec.rfind("cyclic:", 0) == 0) digits = spec.substr(7);
    else if (spec.rfind("Z/", 0) == 0) digits = spec.substr(2);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
        return cyclic_group(std::stoi(digits));
    throw ParseError("unknown group name '" + spec + "'");
}

} // namespace extlab
