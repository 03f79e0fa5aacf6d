// Acceptance runner: one line per criterion. With an argument, runs only that
// criterion; the exit status is nonzero if any criterion run fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "extlab/extlab.hpp"

using namespace extlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

GroupPtr grp(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }
ModulePtr mod(CoeffModule Z) { return std::make_shared<const CoeffModule>(std::move(Z)); }

struct GridPoint {
    std::string label;
    GroupPtr G;
    ModulePtr Z;
};

// G in {Z/2, Z/3, Z/4, Z/2xZ/2, S3}; Z in {Z/2, Z/3, Z, Z with a sign action}.
// Z/3 has no sign character, so it contributes three points.
std::vector<GridPoint> grid() {
    std::vector<GridPoint> out;
    for (auto G : {cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_group(), symmetric3()}) {
        auto g = grp(G);
        std::string name = G.name().empty() ? "Z/" + std::to_string(G.order()) : G.name();
        out.push_back({name + ",Z/2", g, mod(CoeffModule(0, {2}, G.order()))});
        out.push_back({name + ",Z/3", g, mod(CoeffModule(0, {3}, G.order()))});
        out.push_back({name + ",Z", g, mod(CoeffModule(1, {}, G.order()))});
        auto chi = first_sign_character(G);
        if (!chi.empty()) out.push_back({name + ",Z-", g, mod(sign_module(G, chi))});
    }
    return out;
}

Outcome criterion1() {
    std::mt19937_64 rng(1);
    std::int64_t checked = 0;
    for (auto& p : grid())
        for (int n = 0; n <= 3; ++n)
            for (int t = 0; t < 1000; ++t) {
                auto a = random_cochain(p.G, p.Z, n, t % 2 == 0, rng);
                ++checked;
                if (!coboundary(coboundary(a)).is_zero())
                    return {false, "nonzero at " + p.label + " n=" + std::to_string(n)};
            }
    return {true, std::to_string(checked) + " random cochains, delta^2 = 0"};
}

Outcome criterion2() {
    int points = 0;
    for (auto& p : grid())
        for (int n = 0; n <= 3; ++n) {
            ++points;
            auto a = cohomology(p.G, p.Z, n, true).invariant_factors_int();
            auto b = cohomology(p.G, p.Z, n, false).invariant_factors_int();
            if (a != b) return {false, "mismatch at " + p.label + " n=" + std::to_string(n)};
        }
    return {true, std::to_string(points) + " grid points agree"};
}

struct Instance {
    std::string label;
    GroupPtr G;
    OuterMap psi;
};

Outcome criterion3() {
    std::ostringstream os;
    bool pass = true;
    for (int p : {2, 3}) {
        auto G = grp(cyclic_group(p));
        auto T = std::make_shared<const AutTower>(cyclic_group(p));
        auto en = enumerate_extensions(G, trivial_outer_map(*G, T));
        auto h2 = cohomology(G, mod(CoeffModule(0, {p}, p)), 2).order();
        auto bij = check_psi_bijection(G, en);
        bool ok = static_cast<std::int64_t>(en.classes.size()) == to_int64(h2) && bij.h2_order == to_int64(h2) &&
                  bij.onto && bij.injective && bij.pairwise_inequivalent && en.classes.size() == std::size_t(p);
        pass = pass && ok;
        os << "(Z/" << p << ",Z/" << p << "): " << en.classes.size() << " classes, |H^2| = " << h2
           << ", Psi bijective " << (bij.onto && bij.injective ? "yes" : "no") << "; ";
    }
    os << "finite G: im(c^2) = H^2";
    return {pass, os.str()};
}

std::vector<Instance> obstruction_grid() {
    std::vector<Instance> out;
    for (auto G : {cyclic_group(2), cyclic_group(3), klein_group()}) {
        auto g = grp(G);
        for (auto N : {quaternion8(), dihedral4(), symmetric3()}) {
            auto T = std::make_shared<const AutTower>(N);
            for (auto& psi : all_outer_maps(G, T))
                out.push_back({std::to_string(G.order()) + "/" + N.name() + "/" + json(psi.images).dump(), g, psi});
        }
    }
    return out;
}

Outcome criterion4() {
    std::vector<Instance> inst;
    for (int p : {2, 3}) {
        auto G = grp(cyclic_group(p));
        inst.push_back({"Z/" + std::to_string(p), G,
                        trivial_outer_map(*G, std::make_shared<const AutTower>(cyclic_group(p)))});
    }
    for (auto& i : obstruction_grid()) inst.push_back(i);
    int extensions = 0;
    for (auto& i : inst)
        for (auto& cls : enumerate_extensions(i.G, i.psi).classes) {
            ++extensions;
            auto rt = check_roundtrip(cls.cocycle);
            if (!rt.exact || !rt.z || !rt.map_verified) return {false, "roundtrip fails at " + i.label};
        }
    return {true, std::to_string(extensions) + " extensions rebuilt with verified witnesses z"};
}

Outcome criterion5() {
    int instances = 0, vanishing = 0;
    for (auto& i : obstruction_grid()) {
        ++instances;
        auto r = obstruction(i.G, i.psi, ObstructionOptions{20, 0});
        if (!(r.central && r.cocycle && r.degenerate_zero)) return {false, "invariants fail at " + i.label};
        if (r.trials.size() != 20 || !r.trials_agree()) return {false, "re-choice changes the class at " + i.label};
        auto en = enumerate_extensions(i.G, i.psi);
        if (r.vanishes() != !en.classes.empty()) return {false, "vanishing disagrees with search at " + i.label};
        if (r.vanishes() && !validate_nonabelian_cocycle(cocycle_from_obstruction(r)).ok)
            return {false, "zeta beta^-1 is not a cocycle at " + i.label};
        vanishing += r.vanishes();
    }
    return {true, std::to_string(instances) + " instances, " + std::to_string(vanishing) +
                      " vanishing, all matching exhaustive search"};
}

Outcome criterion6() {
    std::ostringstream os;
    for (int p : {2, 3}) {
        auto M = grp(cyclic_group(p));
        auto Z = mod(CoeffModule(0, {p}, p));
        CohomologyGroup H3(M, Z, 3);
        auto f = H3.invariant_factors_int();
        const auto& gens = H3.representatives();
        std::vector<std::int64_t> coeff(f.size(), 0);
        const auto total = to_int64(H3.order());
        for (std::int64_t k = 0; k < total; ++k) {
            Cochain alpha(M, Z, 3, true);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::int64_t t = 0; t < coeff[i]; ++t) alpha = alpha + gens[i];
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (++coeff[i] < f[i]) break;
                coeff[i] = 0;
            }
            auto r = realize(M, alpha, 0, 100);
            if (!r.roundtrip) return {false, "roundtrip fails over Z/" + std::to_string(p)};
            if (r.used_double_flag != (p == 2)) return {false, "double flag wrong over Z/" + std::to_string(p)};
            if (!r.composition_ok || !r.homomorphism_ok || !r.bijective_on_generators)
                return {false, "action checks fail over Z/" + std::to_string(p)};
        }
        os << "H^3(Z/" << p << ",Z/" << p << "): " << total << " classes realized; ";
    }
    os << "Z/2 used M x Z/2";
    return {true, os.str()};
}

Outcome criterion7() {
    std::ostringstream os;
    bool pass = true;
    auto s2 = heis_sigma2();
    bool stated = true;
    std::string mismatch;
    for (auto& g : s2.dom.ball(10))
        for (auto& h : s2.dom.ball(10)) {
            auto d = s2.d(g, h);
            HeisPair expect{{omega(to_vec2(g), to_vec2(h)), {}}, {}};
            if (!(d == expect) && stated) {
                stated = false;
                mismatch = "d((" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "),(" + std::to_string(h[0]) +
                           "," + std::to_string(h[1]) + ")) = " + d.str() + ", expected " + expect.str();
            }
        }
    pass = pass && stated;
    os << "sigma_2 defect = ([det(g,h),0],0) on radius 10: " << (stated ? "yes" : "no, " + mismatch) << "; ";

    auto d2 = defect(s2, 10);
    bool grows = DefectReport<HeisPair>::strictly_increasing(d2.growth) && d2.growth.size() == 10;
    pass = pass && grows;
    os << "growth " << json(d2.growth).dump() << (grows ? " strictly increasing" : " not strictly increasing") << "; ";

    auto s1 = heis_sigma1();
    auto d1 = defect(s1, 5);
    std::vector<HeisPair> probes{{{1, {0, 0}}, {}}, {{0, {1, 0}}, {}}, {{0, {0, 1}}, {}}};
    auto acts = count_conjugation_actions(s1, 5, probes);
    bool s1ok = d1.D.size() == 1 && d1.D[0] == HeisPair{} && acts >= 100;
    pass = pass && s1ok;
    os << "sigma_1 defect {1}, " << acts << " conjugation actions; ";

    auto cd = center_criterion_solver("direct"), cs = center_criterion_solver("semidirect");
    bool centres = cd.rank == 3 && cs.rank == 1 && cd.box_agrees && cs.box_agrees;
    pass = pass && centres;
    os << "centre ranks " << cd.rank << " and " << cs.rank;
    return {pass, os.str()};
}

// Finite sections used across the suite: random tables (some with
// sigma(1) != 1), the constant-shifted homomorphism of Z/4, and the
// distinguished and alternate sections of enumerated extensions.
struct FiniteCase {
    std::string label;
    std::shared_ptr<const FiniteGroup> G, H;
    std::vector<int> table;
};

std::vector<FiniteCase> finite_sections() {
    std::vector<FiniteCase> out;
    std::mt19937_64 rng(9);
    std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs{{cyclic_group(2), cyclic_group(4)},
                                                           {symmetric3(), dihedral4()},
                                                           {klein_group(), quaternion8()},
                                                           {cyclic_group(3), symmetric3()}};
    for (auto& [G, H] : pairs) {
        auto g = grp(G), h = grp(H);
        for (int t = 0; t < 5; ++t) {
            std::vector<int> tab(G.order());
            for (auto& x : tab) x = static_cast<int>(rng() % H.order());
            if (t < 3) tab[G.identity()] = H.identity();
            out.push_back({"random " + std::to_string(G.order()) + "->" + std::to_string(H.order()), g, h, tab});
        }
    }
    out.push_back({"shifted hom Z/4 -> Z/4", grp(cyclic_group(4)), grp(cyclic_group(4)), {1, 2, 3, 0}});
    out.push_back({"Z/2 -> Z/4, t -> 1", grp(cyclic_group(2)), grp(cyclic_group(4)), {0, 1}});
    auto G = grp(cyclic_group(2));
    auto T = std::make_shared<const AutTower>(quaternion8());
    for (auto& psi : all_outer_maps(*G, T))
        for (auto& cls : enumerate_extensions(G, psi).classes) {
            auto E = grp(cls.extension.E);
            out.push_back({"extension section", G, E, cls.extension.sigma});
            auto alt = cls.extension.sigma;
            alt[1] = E->mul(cls.extension.iota[3], alt[1]);
            out.push_back({"alternate extension section", G, E, alt});
        }
    return out;
}

SectionMap<FiniteGroupOps, FiniteGroupOps> as_section(const FiniteCase& c) {
    auto t = c.table;
    return {c.label, {c.G.get()}, {c.H.get()}, [t](const int& g) { return t[g]; }};
}

Outcome criterion8() {
    std::ostringstream os;
    bool pass = true;
    int finite = 0;
    for (auto& c : finite_sections()) {
        auto d = defect(as_section(c));
        ++finite;
        bool ok = d.exhaustive && d.pairs == static_cast<std::int64_t>(c.G->order()) * c.G->order() &&
                  !d.D.empty() && !d.Dbar.empty() && d.D.size() <= static_cast<std::size_t>(c.H->order()) &&
                  d.Dbar.size() <= static_cast<std::size_t>(c.H->order());
        if (!ok) {
            pass = false;
            os << "finite section '" << c.label << "' not exhaustive; ";
        }
    }
    os << finite << " finite sections exhaustive; ";
    auto d2 = defect(heis_sigma2(), 8);
    bool grows = DefectReport<HeisPair>::strictly_increasing(d2.growth) &&
                 DefectReport<HeisPair>::strictly_increasing(d2.growth_bar);
    pass = pass && grows;
    os << "sigma_2 |D| " << json(d2.growth).dump() << " |Dbar| " << json(d2.growth_bar).dump() << "; ";
    bool s1 = true;
    for (int R = 1; R <= 8; ++R) {
        auto d1 = defect(heis_sigma1(), R);
        s1 = s1 && d1.D == std::vector<HeisPair>{HeisPair{}} && d1.Dbar == std::vector<HeisPair>{HeisPair{}};
    }
    pass = pass && s1;
    os << "sigma_1 D = Dbar = {1} for R = 1..8: " << (s1 ? "yes" : "no");
    return {pass, os.str()};
}

Outcome criterion9() {
    std::ostringstream os;
    bool identity = true, containment = true;
    int sections = 0;
    auto check = [&](const auto& s, int R) {
        ++sections;
        auto v = check_qhm_identity(s, sample_triples(s.dom, R, 10000, 0));
        if (!v.holds || (v.checked != 10000 && !s.dom.finite())) {
            identity = false;
            os << "identity fails for " << s.name << "; ";
        }
    };
    check(heis_sigma1(), 10);
    check(heis_sigma2(), 10);
    check(heis_sigma2(1), 10);
    check(direct_section(), 10);
    check(heis_central_section(), 10);
    std::vector<std::string> failures;
    for (auto& c : finite_sections()) {
        auto s = as_section(c);
        check(s, 1);
        auto r = normalization_containment(s);
        if (!r.holds) {
            containment = false;
            failures.push_back("'" + c.label + "' (sigma(1) = " + std::to_string(c.table[c.G->identity()]) +
                               ", extra " + json(r.extra).dump() + ")");
        }
    }
    os << sections << " sections satisfy the twisted identity on sampled triples: " << (identity ? "yes" : "no") << "; ";
    os << "D(sigma~) in D(sigma) + {1}: ";
    if (containment) os << "holds for every finite section";
    else {
        os << "fails for " << failures.size() << " section(s), first " << failures.front();
    }
    return {identity && containment, os.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"coboundary squares to zero on the grid", criterion1},
    {"full and normalized complexes agree", criterion2},
    {"extension classes biject with H^2", criterion3},
    {"extension roundtrip with explicit witness", criterion4},
    {"obstruction soundness", criterion5},
    {"realization roundtrip", criterion6},
    {"Heisenberg suite", criterion7},
    {"D and Dbar co-boundedness", criterion8},
    {"twisted identity and identity normalization", criterion9},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    if (argc > 1) which.push_back(std::atoi(argv[1]));
    else
        for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) which.push_back(i);
    bool all = true;
    for (int c : which) {
        if (c < 1 || c > static_cast<int>(kCriteria.size())) {
            std::cerr << "unknown criterion " << c << "\n";
            return 2;
        }
        auto& [name, run] = kCriteria[c - 1];
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << c << " [" << (o.pass ? "PASS" : "FAIL") << "] " << name << " (" << std::fixed
                  << std::setprecision(2) << secs << " s): " << o.detail << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
