#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "extlab/cohomology.hpp"
#include "extlab/extension.hpp"
#include "extlab/heisenberg.hpp"
#include "extlab/io.hpp"
#include "extlab/obstruction.hpp"
#include "extlab/quasihom.hpp"
#include "extlab/realization.hpp"
#include "extlab/report.hpp"
#include "extlab/symbolic_zoo.hpp"

namespace extlab {

struct RunConfig {
    std::uint64_t budget_auts = 10'000'000;
    std::int64_t budget_enum = 10'000'000;
    int radius = 10;
    std::uint64_t seed = 0;
    int trials = 20;

    json to_json() const {
        return json{{"budget_auts", budget_auts}, {"budget_enum", budget_enum}, {"radius", radius}, {"seed", seed},
                    {"trials", trials}};
    }
};

namespace detail {

inline std::string factors_str(const std::vector<std::int64_t>& f) {
    if (f.empty()) return "0";
    std::string s;
    for (auto d : f) s += (s.empty() ? "" : " + ") + (d == 0 ? std::string("Z") : "Z/" + std::to_string(d));
    return s;
}

inline json table_json(const std::vector<int>& t, int n) {
    json rows = json::array();
    for (int g = 0; g < n; ++g) rows.push_back(std::vector<int>(t.begin() + g * n, t.begin() + (g + 1) * n));
    return rows;
}

} // namespace detail

inline Report cmd_cohomology(const FiniteGroup& Gv, const CoeffModule& Zv, int n, bool normalized,
                             const RunConfig& cfg) {
    Report rep;
    rep.command = "cohomology";
    rep.config = cfg.to_json();
    rep.config["group"] = Gv.name();
    rep.config["degree"] = n;
    rep.config["normalized"] = normalized;
    auto G = std::make_shared<const FiniteGroup>(Gv);
    auto Z = std::make_shared<const CoeffModule>(Zv);
    CohomologyGroup H(G, Z, n, CohomologyOptions{normalized});
    auto f = H.invariant_factors_int();
    json reps = json::array();
    bool closed = true;
    for (auto& r : H.representatives()) {
        closed = closed && coboundary(r).is_zero();
        reps.push_back(cochain_to_json(r));
    }
    rep.results = json{{"invariant_factors", f}, {"group", detail::factors_str(f)}, {"representatives", reps},
                       {"comparison", comparison_image_flag(H).justification}};
    rep.check("representatives are cocycles", "cochain.cocycle_representatives", closed);
    if (cell_count(G->order(), n + 1, false) * Z->dim() <= 200000) {
        CohomologyGroup H2(G, Z, n, CohomologyOptions{!normalized});
        rep.check("normalized and full complexes give the same invariant factors", "cochain.normalized_agrees",
                  H2.invariant_factors_int() == f, detail::factors_str(H2.invariant_factors_int()));
    }
    return rep;
}

// Psi: H^2(G, Z(N)) -> classes, checked to be a bijection onto the
// enumerated classes, which are themselves pairwise inequivalent.
struct BijectionCheck {
    std::int64_t h2_order = 0;
    std::size_t classes = 0;
    bool pairwise_inequivalent = true;
    bool onto = true;
    bool injective = true;
    std::vector<int> image;  // class index hit by each element of H^2
};

inline BijectionCheck check_psi_bijection(const GroupPtr& G, const EnumerationResult& en) {
    BijectionCheck out;
    out.classes = en.classes.size();
    if (en.classes.empty()) return out;
    const auto& base = en.classes.front().cocycle;
    EquivalenceSolver solver(G, base.phi, base.N());
    out.h2_order = to_int64(solver.h2().order());
    for (std::size_t a = 0; a < en.classes.size(); ++a)
        for (std::size_t b = a + 1; b < en.classes.size(); ++b)
            if (solver.witness(en.classes[a].cocycle, en.classes[b].cocycle)) out.pairwise_inequivalent = false;
    std::set<int> hit;
    const auto& H2 = solver.h2();
    const auto f = H2.invariant_factors_int();
    const auto& gens = H2.representatives();
    std::vector<std::int64_t> coeff(f.size(), 0);
    for (std::int64_t k = 0; k < out.h2_order; ++k) {
        Cochain alpha(G, H2.module(), 2, true);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::int64_t t = 0; t < coeff[i]; ++t) alpha = alpha + gens[i];
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (++coeff[i] < f[i]) break;
            coeff[i] = 0;
        }
        auto c = twist_cocycle(alpha, base, solver.center());
        if (!validate_nonabelian_cocycle(c)) {
            out.onto = false;
            out.image.push_back(-1);
            continue;
        }
        int idx = -1;
        for (std::size_t j = 0; j < en.classes.size(); ++j)
            if (solver.witness(c, en.classes[j].cocycle)) {
                idx = static_cast<int>(j);
                break;
            }
        out.image.push_back(idx);
        if (idx < 0) out.onto = false;
        else if (!hit.insert(idx).second) out.injective = false;
    }
    if (hit.size() != en.classes.size()) out.onto = false;
    return out;
}

// build -> extract along the distinguished section -> rebuild; returns the
// equivalence witness z if the rebuilt extension is equivalent.
struct RoundtripCheck {
    bool exact = false;
    std::optional<std::vector<int>> z;
    bool map_verified = false;
};

inline RoundtripCheck check_roundtrip(const NonAbelianCocycle& c) {
    RoundtripCheck out;
    auto ext = build_extension(c);
    auto back = cocycle_of_section(ext, ext.sigma);
    out.exact = back.e == c.e && back.phi == c.phi;
    auto ext2 = build_extension(back);
    out.z = equivalent(c, back);
    if (out.z) out.map_verified = verify_equivalence_map(ext, ext2, *out.z);
    return out;
}

inline Report cmd_extensions(const GroupPtr& G, const OuterMap& psi, const RunConfig& cfg) {
    Report rep;
    rep.command = "extensions";
    rep.config = cfg.to_json();
    rep.config["G"] = G->name();
    rep.config["N"] = psi.target().name();
    rep.config["psi"] = psi.images;
    auto en = enumerate_extensions(G, psi, cfg.budget_enum);
    json classes = json::array();
    bool all_roundtrip = true, all_bounded = true;
    for (auto& cls : en.classes) {
        auto rt = check_roundtrip(cls.cocycle);
        all_roundtrip = all_roundtrip && rt.exact && rt.z && rt.map_verified;
        auto b = is_bounded_extension(cls.extension);
        all_bounded = all_bounded && b.verdict == "bounded";
        std::map<int, int> orders;
        for (int x = 0; x < cls.extension.E.order(); ++x) ++orders[cls.extension.E.element_order(x)];
        json ord = json::object();
        for (auto& [o, k] : orders) ord[std::to_string(o)] = k;
        classes.push_back(json{{"e", detail::table_json(cls.cocycle.e, G->order())},
                               {"class_coords", cls.class_coords},
                               {"order_E", cls.extension.E.order()},
                               {"element_orders", ord},
                               {"abelian", cls.extension.E.is_abelian()},
                               {"bounded", b.verdict}});
    }
    auto bij = check_psi_bijection(G, en);
    rep.results = json{{"candidates", en.candidates}, {"valid_cocycles", en.valid},
                       {"class_count", en.classes.size()},   {"h2_order", bij.h2_order},
                       {"psi_image", bij.image},             {"classes", classes},
                       {"comparison", "finite group: im(c^2) = H^2, so bounded and ordinary classes coincide"}};
    if (!en.classes.empty()) {
        rep.check("class count equals |H^2(G, Z(N))|", "extensions.count",
                  static_cast<std::int64_t>(en.classes.size()) == bij.h2_order,
                  std::to_string(en.classes.size()) + " classes, |H^2| = " + std::to_string(bij.h2_order));
        rep.check("enumerated classes are pairwise inequivalent", "extensions.pairwise", bij.pairwise_inequivalent);
        rep.check("Psi is a bijection from H^2 onto the classes", "extensions.psi_bijection", bij.onto && bij.injective);
        rep.check("build, extract, rebuild gives an equivalent extension", "extensions.roundtrip", all_roundtrip);
        rep.check("finite extensions are bounded", "extensions.bounded", all_bounded);
    }
    return rep;
}

// A single cocycle from a file: validation, roundtrip, induced psi.
inline Report cmd_extension_of(const NonAbelianCocycle& c, const RunConfig& cfg) {
    Report rep;
    rep.command = "extensions";
    rep.config = cfg.to_json();
    auto v = validate_nonabelian_cocycle(c);
    rep.results = json{{"valid", v.ok}};
    if (!v.ok) {
        rep.results["condition"] = v.condition;
        rep.results["witness"] = v.witness;
        rep.check("cocycle conditions hold", "extensions.validate", false,
                  "condition (" + v.condition + ") fails at " + json(v.witness).dump() + ": " + v.detail);
        return rep;
    }
    rep.check("cocycle conditions hold", "extensions.validate", true);
    auto ext = build_extension(c);
    auto rt = check_roundtrip(c);
    auto psi = induced_psi(ext, cfg.seed);
    auto b = is_bounded_extension(ext);
    rep.results["order_E"] = ext.E.order();
    rep.results["psi"] = psi.images;
    rep.results["bounded"] = b.verdict;
    rep.results["certificate"] = b.certificate;
    rep.check("extracted cocycle equals the input", "extensions.extract", rt.exact);
    rep.check("rebuilt extension is equivalent with a verified map", "extensions.roundtrip", rt.z && rt.map_verified);
    return rep;
}

inline Report cmd_obstruction(const GroupPtr& G, const std::vector<OuterMap>& psis, const RunConfig& cfg) {
    Report rep;
    rep.command = "obstruction";
    rep.config = cfg.to_json();
    rep.config["G"] = G->name();
    if (!psis.empty()) rep.config["N"] = psis.front().target().name();
    json items = json::array();
    for (auto& psi : psis) {
        auto r = obstruction(G, psi, ObstructionOptions{cfg.trials, cfg.seed});
        std::string tag = "psi=" + json(psi.images).dump();
        json item{{"psi", psi.images},
                  {"zeta", detail::table_json(r.zeta, G->order())},
                  {"center_factors", r.center.coords.moduli()},
                  {"h3_factors", r.h3_factors},
                  {"class_coords", r.class_coords},
                  {"o_b", cochain_to_json(r.o_b)},
                  {"vanishes", r.vanishes()},
                  {"trials", r.trials.size()}};
        if (r.class_zero) item["beta"] = cochain_to_json(*r.class_zero);
        rep.check("o_b is central, a cocycle and zero on degenerate triples [" + tag + "]", "obstruction.invariants",
                  r.central && r.cocycle && r.degenerate_zero);
        rep.check("class unchanged under re-choices of (phi, zeta) [" + tag + "]", "obstruction.choice_independence",
                  r.trials_agree(), std::to_string(r.trials.size()) + " trials");
        if (r.vanishes()) {
            auto c = cocycle_from_obstruction(r);
            rep.check("e = zeta beta^-1 is a non-abelian cocycle [" + tag + "]", "obstruction.existence_construction",
                      validate_nonabelian_cocycle(c).ok);
        }
        try {
            auto en = enumerate_extensions(G, psi, cfg.budget_enum);
            item["extensions"] = en.classes.size();
            rep.check("vanishing agrees with exhaustive extension search [" + tag + "]", "obstruction.vanishing_iff",
                      r.vanishes() == !en.classes.empty(),
                      std::to_string(en.classes.size()) + " classes found");
        } catch (const BudgetExceeded& e) {
            item["extensions"] = "budget exceeded";
        }
        items.push_back(item);
    }
    rep.results = json{{"instances", items}};
    return rep;
}

namespace detail {

template <class S>
void defect_section(Report& rep, const S& s, int R, std::uint64_t seed) {
    auto d = defect(s, R);
    using DR = std::decay_t<decltype(d)>;
    auto triples = sample_triples(s.dom, std::min(R, 5), 10000, seed);
    auto id = check_qhm_identity(s, triples);
    rep.results = json{{"section", s.name},          {"radius", R},
                       {"pairs", d.pairs},           {"exhaustive", d.exhaustive},
                       {"D_size", d.D.size()},       {"Dbar_size", d.Dbar.size()},
                       {"growth", d.growth},         {"growth_bar", d.growth_bar},
                       {"verdict", d.growth_verdict()}, {"identity_checked", id.checked}};
    rep.check("twisted cocycle identity on sampled triples", "quasihom.identity", id.holds,
              std::to_string(id.checked) + " triples");
    rep.check("D and Dbar are both bounded or both growing", "quasihom.d_dbar_agree",
              DR::constant(d.growth) == DR::constant(d.growth_bar));
}

} // namespace detail

// Scenarios: heis_sigma1, heis_sigma2, heis_central, direct_product, or a
// JSON file {"G": group, "H": group, "sigma": [images]}.
inline Report cmd_defect(const std::string& scenario, const RunConfig& cfg) {
    Report rep;
    rep.command = "defect " + scenario;
    rep.config = cfg.to_json();
    rep.config["scenario"] = scenario;
    if (scenario == "heis_sigma1") detail::defect_section(rep, heis_sigma1(), cfg.radius, cfg.seed);
    else if (scenario == "heis_sigma2") detail::defect_section(rep, heis_sigma2(), cfg.radius, cfg.seed);
    else if (scenario == "heis_central") detail::defect_section(rep, heis_central_section(), cfg.radius, cfg.seed);
    else if (scenario == "direct_product") detail::defect_section(rep, direct_section(), cfg.radius, cfg.seed);
    else {
        auto j = load_json(scenario);
        auto G = group_from_json(j.at("G"), scenario + ".G");
        auto H = group_from_json(j.at("H"), scenario + ".H");
        auto sig = detail::with_context(scenario, [&] { return j.at("sigma").get<std::vector<int>>(); });
        if (static_cast<int>(sig.size()) != G.order()) throw ParseError(scenario + ": sigma has wrong length");
        for (int v : sig)
            if (v < 0 || v >= H.order()) throw ParseError(scenario + ": sigma value out of range");
        SectionMap<FiniteGroupOps, FiniteGroupOps> s{"table", {&G}, {&H}, [sig](const int& g) { return sig[g]; }};
        detail::defect_section(rep, s, 1, cfg.seed);
        auto delta = defect_group(FiniteGroupOps{&H}, defect(s).D);
        rep.results["defect_group"] = delta;
        auto cont = normalization_containment(s);
        rep.results["normalized_defect_extra"] = cont.extra;
        rep.check("D(sigma~) lies in D(sigma) + {1}", "quasihom.normalization", cont.holds,
                  cont.holds ? "" : json(cont.extra).dump() + " outside");
    }
    if (scenario == "heis_sigma2" || scenario == "heis_central") {
        auto g = rep.results["growth"].get<std::vector<std::int64_t>>();
        rep.check("distinct defects strictly increase with the radius", "quasihom.growth",
                  DefectReport<int>::strictly_increasing(g));
    }
    if (scenario == "heis_sigma1" || scenario == "direct_product")
        rep.check("section is a homomorphism", "quasihom.homomorphism",
                  rep.results["D_size"] == 1 && rep.results["Dbar_size"] == 1);
    return rep;
}

inline Report cmd_realize(const GroupPtr& M, const Cochain& alpha, const RunConfig& cfg) {
    Report rep;
    rep.command = "realize";
    rep.config = cfg.to_json();
    rep.config["M"] = M->name();
    auto r = realize(M, alpha, cfg.seed);
    CohomologyGroup H3(M, alpha.module(), 3, CohomologyOptions{});
    std::vector<std::int64_t> coords;
    for (auto& v : H3.class_of(r.alpha)) coords.push_back(to_int64(v));
    json alphabet = json::array();
    for (int s = 0; s < r.rank_F; ++s) {
        auto [g, h] = r.N->symbol_pair(s);
        alphabet.push_back("<" + std::to_string(g) + "," + std::to_string(h) + ">");
    }
    rep.results = json{{"h3_factors", H3.invariant_factors_int()},
                       {"alpha_class", coords},
                       {"used_double_flag", r.used_double_flag},
                       {"rank_F", r.rank_F},
                       {"alphabet", alphabet},
                       {"center_is_Z", r.center_is_Z},
                       {"center_reason", r.center_reason},
                       {"composition_checks", r.composition_checks},
                       {"homomorphism_checks", r.homomorphism_checks},
                       {"bijectivity_checks", r.bijectivity_checks},
                       {"bijectivity_bound", "generators"},
                       {"sample_images", r.sample_images},
                       {"obstruction", cochain_to_json(r.obstruction)},
                       {"roundtrip", r.roundtrip}};
    rep.check("phi(g1) phi(g2) = conj<g1,g2> phi(g1 g2)", "realize.composition", r.composition_ok,
              std::to_string(r.composition_checks) + " checks");
    rep.check("phi(g) respects products", "realize.homomorphism", r.homomorphism_ok);
    rep.check("phi(g) is invertible on generators", "realize.bijective", r.bijective_on_generators);
    rep.check("centre of Z x F is Z", "realize.centre", r.center_is_Z, r.center_reason);
    rep.check("M = Z/2 goes through M x Z/2", "realize.double", r.used_double_flag == (M->order() == 2));
    rep.check("obstruction of the realization is cohomologous to alpha", "realize.roundtrip", r.roundtrip);
    return rep;
}

inline Report cmd_example(const std::string& name, const RunConfig& cfg) {
    auto rep = run_example(name, cfg.radius);
    rep.config = cfg.to_json();
    rep.config["name"] = name;
    return rep;
}

// A fast battery over every module.
inline Report cmd_selftest(const RunConfig& cfg) {
    Report rep;
    rep.command = "selftest";
    rep.config = cfg.to_json();
    auto Z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
    auto Z2m = std::make_shared<const CoeffModule>(0, std::vector<std::int64_t>{2}, 2);
    auto f = cohomology(Z2, Z2m, 2).invariant_factors_int();
    rep.check("H^2(Z/2, Z/2) = Z/2", "selftest.cohomology", f == std::vector<std::int64_t>{2});
    auto t2 = std::make_shared<const AutTower>(cyclic_group(2), cfg.budget_auts);
    auto en = enumerate_extensions(Z2, trivial_outer_map(*Z2, t2), cfg.budget_enum);
    rep.check("two extensions of Z/2 by Z/2", "selftest.extensions", en.classes.size() == 2);
    auto tq = std::make_shared<const AutTower>(quaternion8(), cfg.budget_auts);
    bool ok = true;
    for (auto& psi : all_outer_maps(*Z2, tq)) {
        auto r = obstruction(Z2, psi, ObstructionOptions{5, cfg.seed});
        ok = ok && r.trials_agree() && r.vanishes() == !enumerate_extensions(Z2, psi, cfg.budget_enum).classes.empty();
    }
    rep.check("Q8 obstructions over Z/2 match the extension search", "selftest.obstruction", ok);
    auto d = defect(heis_sigma2(), 4);
    rep.check("sigma_2 defect grows", "selftest.defect", DefectReport<HeisPair>::strictly_increasing(d.growth));
    auto Z3 = std::make_shared<const FiniteGroup>(cyclic_group(3));
    auto Z3m = std::make_shared<const CoeffModule>(0, std::vector<std::int64_t>{3}, 3);
    auto H3 = cohomology(Z3, Z3m, 3);
    auto r = realize(Z3, H3.representatives().at(0), cfg.seed, 20);
    rep.check("realization roundtrip over Z/3", "selftest.realize", r.roundtrip);
    auto c = center_criterion_solver("semidirect");
    rep.check("centre of the semidirect product has rank 1", "selftest.centre", c.rank == 1);
    return rep;
}

} // namespace extlab
