#include <gtest/gtest.h>

#include <random>

#include "extlab/obstruction.hpp"
#include "extlab/realization.hpp"

using namespace extlab;

namespace {

GroupPtr grp(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }
TowerPtr tower(FiniteGroup N) { return std::make_shared<const AutTower>(std::move(N)); }
ModulePtr cyc(const FiniteGroup& G, std::int64_t d) {
    return std::make_shared<const CoeffModule>(0, std::vector<std::int64_t>{d}, G.order());
}

} // namespace

TEST(Obstruction, AbelianCoefficientsGiveZero) {
    for (auto N : {cyclic_group(3), klein_group()}) {
        auto G = grp(cyclic_group(2));
        auto T = tower(N);
        for (auto& psi : all_outer_maps(*G, T)) {
            auto r = obstruction(G, psi);
            EXPECT_TRUE(r.o_b.is_zero());
            for (int z : r.zeta) EXPECT_EQ(z, T->N().identity());
            EXPECT_TRUE(r.vanishes());
        }
    }
}

TEST(Obstruction, HomomorphicLiftGivesTrivialZeta) {
    auto G = grp(cyclic_group(3));
    auto T = tower(symmetric3());
    auto r = obstruction(G, trivial_outer_map(*G, T));
    for (int z : r.zeta) EXPECT_EQ(z, 0);
}

TEST(Obstruction, QuaternionZetaReverified) {
    auto G = grp(cyclic_group(2));
    auto T = tower(quaternion8());
    for (auto& psi : all_outer_maps(*G, T)) {
        auto phi = canonical_lift(*G, psi);
        auto zeta = build_zeta(*G, *T, phi);
        for (int g = 0; g < 2; ++g)
            for (int h = 0; h < 2; ++h)
                EXPECT_EQ(conjugation(T->N(), zeta[g * 2 + h]),
                          compose(compose(phi[g], phi[h]), inverse(phi[G->mul(g, h)])));
    }
}

TEST(Obstruction, NotInnerWhenPsiIsNotAHomomorphism) {
    auto G = grp(cyclic_group(2));
    auto T = tower(quaternion8());
    // an automorphism of order 3 modulo Inn does not square to an inner one
    for (auto& a : T->auts())
        if (T->out_group().element_order(T->coset_of(a)) == 3) {
            EXPECT_THROW(build_zeta(*G, *T, {identity_automorphism(T->N()), a}), NotInner);
            break;
        }
}

TEST(Obstruction, VanishingMatchesEnumeration) {
    for (auto Gv : {cyclic_group(2), cyclic_group(3), cyclic_group(4)}) {
        auto G = grp(Gv);
        for (auto Nv : {quaternion8(), dihedral4(), symmetric3()}) {
            auto T = tower(Nv);
            for (auto& psi : all_outer_maps(*G, T)) {
                auto r = obstruction(G, psi, {5, 1});
                EXPECT_TRUE(r.central && r.cocycle && r.degenerate_zero);
                EXPECT_TRUE(r.trials_agree());
                auto en = enumerate_extensions(G, psi);
                EXPECT_EQ(r.vanishes(), !en.classes.empty());
                if (r.vanishes()) {
                    auto beta = *r.class_zero;
                    EXPECT_EQ(coboundary(beta), r.o_b);
                    EXPECT_TRUE(validate_nonabelian_cocycle(cocycle_from_obstruction(r)).ok);
                }
            }
        }
    }
}

TEST(Obstruction, PsiBijectionOnZ2ByZ2) {
    auto G = grp(cyclic_group(2));
    auto T = tower(cyclic_group(2));
    auto psi = trivial_outer_map(*G, T);
    auto en = enumerate_extensions(G, psi);
    ASSERT_EQ(en.classes.size(), 2u);
    const auto& base = en.classes[0].cocycle;
    auto Z = center_module(T->N(), base.phi);
    auto Zm = std::make_shared<const CoeffModule>(Z.module);
    CohomologyGroup H2(G, Zm, 2);
    Cochain zero(G, Zm, 2, true);
    auto e0 = psi_bijection(zero, base, Z);
    EXPECT_EQ(e0.E, build_extension(base).E);
    auto a = H2.representatives().at(0);
    auto c1 = twist_cocycle(a, base, Z);
    EXPECT_FALSE(equivalent(c1, base));
    EXPECT_TRUE(equivalent(c1, en.classes[1].cocycle));
    // alpha + delta z lands in the same class
    Cochain z(G, Zm, 1, true);
    z.set({1}, {1});
    EXPECT_TRUE(equivalent(twist_cocycle(a + coboundary(z), base, Z), c1));
    Cochain bad(G, Zm, 2, false);
    bad.set({0, 1}, {1});
    EXPECT_THROW(psi_bijection(bad, base, Z), NotACocycle);
}

TEST(Realize, ZeroClassOverZ3) {
    auto M = grp(cyclic_group(3));
    auto Z = cyc(*M, 3);
    auto r = realize(M, Cochain(M, Z, 3, true), 0, 20);
    EXPECT_FALSE(r.used_double_flag);
    EXPECT_EQ(r.rank_F, 4);
    EXPECT_TRUE(r.center_is_Z);
    EXPECT_TRUE(r.obstruction.is_zero());
    EXPECT_TRUE(r.roundtrip);
}

TEST(Realize, GeneratorOverZ3IsRecoveredExactly) {
    auto M = grp(cyclic_group(3));
    auto Z = cyc(*M, 3);
    auto H3 = cohomology(M, Z, 3);
    ASSERT_EQ(H3.invariant_factors_int(), std::vector<std::int64_t>{3});
    auto alpha = H3.representatives()[0];
    auto r = realize(M, alpha, 0, 50);
    EXPECT_EQ(r.obstruction, alpha);
    EXPECT_TRUE(r.roundtrip);
    EXPECT_TRUE(r.composition_ok && r.homomorphism_ok && r.bijective_on_generators);
}

TEST(Realize, Z2GoesThroughTheDouble) {
    auto M = grp(cyclic_group(2));
    auto Z = cyc(*M, 2);
    auto alpha = cohomology(M, Z, 3).representatives().at(0);
    auto r = realize(M, alpha, 0, 50);
    EXPECT_TRUE(r.used_double_flag);
    EXPECT_EQ(r.rank_F, 9);
    EXPECT_TRUE(r.roundtrip);
    EXPECT_FALSE(class_equal(r.obstruction, Cochain(M, Z, 3, true)));
}

TEST(Realize, InputChecks) {
    auto D = grp(dihedral4());
    EXPECT_THROW(realize(D, Cochain(D, cyc(*D, 2), 3, true)), SymbolBudgetExceeded);
    auto M = grp(cyclic_group(3));
    Cochain full(M, cyc(*M, 3), 3, false);
    full.set({0, 1, 1}, {1});
    EXPECT_THROW(realize(M, full), NotNormalized);
    Cochain notco(M, cyc(*M, 3), 3, true);
    notco.set({1, 1, 1}, {1});
    EXPECT_THROW(realize(M, notco), NotACocycle);
}

TEST(Realize, MacLaneAction) {
    auto M = grp(cyclic_group(3));
    auto Z = cyc(*M, 3);
    auto alpha = cohomology(M, Z, 3).representatives().at(0);
    MacLaneGroup N(M, alpha);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto x = N.random_element(rng, 5);
        EXPECT_EQ(N.apply(0, x), x);
    }
    MixedElement z{{2}, {}};
    for (int g = 0; g < 3; ++g) EXPECT_EQ(N.apply(g, z), z);
    // phi(g)<h,i> = alpha(g,h,i) <g,h><gh,i><g,hi>^-1
    for (int g = 1; g < 3; ++g)
        for (int h = 1; h < 3; ++h)
            for (int i = 1; i < 3; ++i) {
                auto img = N.apply(g, N.generator(N.symbol(h, i)));
                auto w = word_mul(word_mul(N.bracket(g, h), N.bracket(M->mul(g, h), i)), word_inv(N.bracket(g, M->mul(h, i))));
                EXPECT_EQ(img.w, w);
                EXPECT_EQ(img.z, Z->reduce(alpha.at({g, h, i})));
            }
}

TEST(FSet, PullbackClasses) {
    auto M = grp(cyclic_group(2));
    auto Z = cyc(*M, 2);
    auto alpha = cohomology(M, Z, 3).representatives().at(0);
    auto G = grp(cyclic_group(4));
    EXPECT_TRUE(f_set_member(G, {0, 0, 0, 0}, alpha).pulled.is_zero());
    auto same = f_set_member(M, {0, 1}, alpha);
    EXPECT_EQ(same.pulled, alpha);
    EXPECT_EQ(same.class_coords, std::vector<std::int64_t>{1});

    auto m = f_set_member(G, {0, 1, 0, 1}, alpha);
    auto r = realize(M, alpha, 0, 20);
    auto o = realization_obstruction_along(r, G, {0, 1, 0, 1});
    EXPECT_TRUE(class_equal(o, m.pulled));
    EXPECT_THROW(f_set_member(G, {0, 1, 1, 0}, alpha), NotAHomomorphism);
}
