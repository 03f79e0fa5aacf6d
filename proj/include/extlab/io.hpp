#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "extlab/automorphism.hpp"
#include "extlab/cochain.hpp"
#include "extlab/coeff_module.hpp"
#include "extlab/extension.hpp"
#include "extlab/group.hpp"
#include "extlab/report.hpp"

namespace extlab {

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace detail {

template <class F>
auto with_context(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline std::vector<int> parse_tuple(const std::string& key) {
    std::vector<int> t;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw ParseError("bad tuple key '" + key + "'");
        }
        if (used != part.size() && part.find_first_not_of(' ', used) != std::string::npos)
            throw ParseError("bad tuple key '" + key + "'");
        t.push_back(v);
    }
    return t;
}

} // namespace detail

// {"order": n, "table": [[...]]} or {"permgens": [[cycles...], ...]}.
inline FiniteGroup group_from_json(const json& j, const std::string& where = "group") {
    return detail::with_context(where, [&] {
        std::string name = j.value("name", std::string());
        if (j.contains("permgens")) {
            std::vector<Permutation> gens;
            for (auto& g : j.at("permgens")) gens.push_back(permutation_from_cycles(g.get<std::vector<std::vector<int>>>()));
            return permutation_group(gens, name);
        }
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
            throw ParseError(where + ": order does not match table size");
        return make_group(table, name);
    });
}

// A builtin name (see builtin_group) or a JSON file path.
inline FiniteGroup load_group(const std::string& arg) {
    if (std::filesystem::exists(arg)) return group_from_json(load_json(arg), arg);
    return builtin_group(arg);
}

// {"rank": r, "torsion": [...], "weights": [...], "action": {"g": [[matrix]]}}.
inline CoeffModule module_from_json(const json& j, const FiniteGroup& G, const std::string& where = "module") {
    return detail::with_context(where, [&] {
        CoeffModule Z(j.value("rank", 0), j.value("torsion", std::vector<std::int64_t>{}), G.order(),
                      j.value("weights", std::vector<std::int64_t>{}));
        if (j.contains("action"))
            for (auto& [key, m] : j.at("action").items()) {
                int g = std::stoi(key);
                if (g < 0 || g >= G.order()) throw ParseError(where + ": action key " + key + " out of range");
                auto rows = m.get<std::vector<std::vector<std::int64_t>>>();
                Matrix<std::int64_t> A(Z.dim(), Z.dim());
                if (static_cast<int>(rows.size()) != Z.dim()) throw InvalidModule("action matrix has wrong shape");
                for (int r = 0; r < Z.dim(); ++r) {
                    if (static_cast<int>(rows[r].size()) != Z.dim()) throw InvalidModule("action matrix has wrong shape");
                    for (int c = 0; c < Z.dim(); ++c) A(r, c) = rows[r][c];
                }
                Z.set_action(g, A);
            }
        Z.validate(G);
        return Z;
    });
}

// Names: Z, Z/n (trivial action), Z-, Z/n- (sign action through the first
// surjection onto Z/2); anything else is a JSON file.
inline CoeffModule load_module(const std::string& arg, const FiniteGroup& G) {
    if (std::filesystem::exists(arg)) return module_from_json(load_json(arg), G, arg);
    std::string s = arg;
    bool sign = !s.empty() && s.back() == '-';
    if (sign) s.pop_back();
    std::int64_t d = 0;
    if (s == "Z") d = 0;
    else if (s.rfind("Z/", 0) == 0 && s.size() > 2 && std::all_of(s.begin() + 2, s.end(), ::isdigit)) d = std::stoll(s.substr(2));
    else throw ParseError("unknown module '" + arg + "'");
    if (sign) {
        auto chi = first_sign_character(G);
        if (chi.empty()) throw InvalidModule(G.name() + " has no surjection onto Z/2");
        return sign_module(G, chi, d);
    }
    return d == 0 ? CoeffModule(1, {}, G.order()) : CoeffModule(0, {d}, G.order());
}

// {"degree": n, "values": {"g1,g2,...": [coords]}}; normalized storage is used
// when no key contains the identity.
inline Cochain cochain_from_json(const json& j, GroupPtr G, ModulePtr Z, const std::string& where = "cochain") {
    return detail::with_context(where, [&] {
        int n = j.at("degree").get<int>();
        std::vector<std::pair<std::vector<int>, ModElement>> entries;
        bool touches_identity = false;
        if (j.contains("values"))
            for (auto& [key, v] : j.at("values").items()) {
                auto t = detail::parse_tuple(key);
                if (static_cast<int>(t.size()) != n) throw ParseError(where + ": key '" + key + "' has wrong arity");
                for (int g : t) {
                    if (g < 0 || g >= G->order()) throw ParseError(where + ": key '" + key + "' out of range");
                    touches_identity = touches_identity || g == G->identity();
                }
                auto coords = v.get<std::vector<std::int64_t>>();
                if (static_cast<int>(coords.size()) != Z->dim()) throw ParseError(where + ": value for '" + key + "' has wrong length");
                entries.emplace_back(t, Z->reduce(coords));
            }
        Cochain a(G, Z, n, !touches_identity);
        for (auto& [t, v] : entries) a.set(t, v);
        return a;
    });
}

inline json cochain_to_json(const Cochain& a) {
    json values = json::object();
    for (std::int64_t c = 0; c < a.cells(); ++c) {
        auto v = a.cell_value(c);
        if (a.module()->is_zero(v)) continue;
        std::string key;
        for (int g : a.tuple_of(c)) key += (key.empty() ? "" : ",") + std::to_string(g);
        values[key] = v;
    }
    return json{{"degree", a.degree()}, {"normalized", a.normalized()}, {"values", values}};
}

namespace detail {

inline FiniteGroup group_field(const json& j, const std::string& where) {
    if (j.is_string()) return load_group(j.get<std::string>());
    return group_from_json(j, where);
}

} // namespace detail

// {"G": group, "N": group, "phi": {"g": perm}, "e": {"g,h": n}}; groups are
// builtin names or inline objects, omitted entries are identities.
inline NonAbelianCocycle cocycle_from_json(const json& j, std::uint64_t aut_budget = 10'000'000,
                                           const std::string& where = "cocycle") {
    return detail::with_context(where, [&] {
        auto G = std::make_shared<const FiniteGroup>(detail::group_field(j.at("G"), where + ".G"));
        auto tower = std::make_shared<const AutTower>(detail::group_field(j.at("N"), where + ".N"), aut_budget);
        const auto& N = tower->N();
        const int n = G->order();
        std::vector<Automorphism> phi(n, identity_automorphism(N));
        if (j.contains("phi"))
            for (auto& [key, p] : j.at("phi").items()) {
                int g = std::stoi(key);
                if (g < 0 || g >= n) throw ParseError(where + ": phi key " + key + " out of range");
                Automorphism a{p.get<std::vector<int>>()};
                if (!is_automorphism(N, a)) throw NotAHomomorphism(where + ": phi(" + key + ") is not an automorphism");
                phi[g] = a;
            }
        std::vector<int> e(static_cast<std::size_t>(n) * n, N.identity());
        if (j.contains("e"))
            for (auto& [key, v] : j.at("e").items()) {
                auto t = detail::parse_tuple(key);
                if (t.size() != 2 || t[0] < 0 || t[0] >= n || t[1] < 0 || t[1] >= n)
                    throw ParseError(where + ": bad e key '" + key + "'");
                int x = v.get<int>();
                if (x < 0 || x >= N.order()) throw ParseError(where + ": e value out of range at '" + key + "'");
                e[static_cast<std::size_t>(t[0]) * n + t[1]] = x;
            }
        return NonAbelianCocycle{G, tower, e, phi};
    });
}

inline json cocycle_to_json(const NonAbelianCocycle& c) {
    json phi = json::object(), e = json::object();
    const int n = c.G->order();
    for (int g = 0; g < n; ++g) {
        phi[std::to_string(g)] = c.phi[g].perm;
        for (int h = 0; h < n; ++h)
            if (c.e_at(g, h) != c.N().identity()) e[std::to_string(g) + "," + std::to_string(h)] = c.e_at(g, h);
    }
    auto group = [](const FiniteGroup& X) { return json{{"order", X.order()}, {"table", X.table()}}; };
    return json{{"G", group(*c.G)}, {"N", group(c.N())}, {"phi", phi}, {"e", e}};
}

// psi-spec: "trivial", "#k" (k-th homomorphism G -> Out(N) in sorted order),
// or comma-separated coset indices of Out(N), one per element of G.
inline OuterMap parse_psi(const std::string& spec, const FiniteGroup& G, const std::shared_ptr<const AutTower>& tower) {
    if (spec.empty() || spec == "trivial") return trivial_outer_map(G, tower);
    if (spec[0] == '#') {
        auto all = all_outer_maps(G, tower);
        int k = static_cast<int>(detail::parse_tuple(spec.substr(1)).at(0));
        if (k < 0 || k >= static_cast<int>(all.size()))
            throw ParseError("psi index " + std::to_string(k) + " out of range (" + std::to_string(all.size()) + " maps)");
        return all[k];
    }
    auto images = detail::parse_tuple(spec);
    if (static_cast<int>(images.size()) != G.order())
        throw ParseError("psi-spec needs " + std::to_string(G.order()) + " coset indices");
    return make_outer_map(G, tower, images);
}

} // namespace extlab
