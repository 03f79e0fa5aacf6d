#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "extlab/commands.hpp"
#include "extlab/io.hpp"

using namespace extlab;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    auto path = testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST(Io, GroupFromTableAndPermutations) {
    auto G = group_from_json(json::parse(R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})"));
    EXPECT_EQ(G.order(), 3);
    auto S = group_from_json(json::parse(R"({"permgens": [[[0,1]], [[0,1,2]]]})"));
    EXPECT_EQ(S.order(), 6);
    EXPECT_FALSE(S.is_abelian());
    EXPECT_THROW(group_from_json(json::parse(R"({"order": 2, "table": [[0,1,2],[1,2,0],[2,0,1]]})")), ParseError);
    EXPECT_THROW(group_from_json(json::parse(R"({"tabel": []})")), ParseError);
    EXPECT_THROW(group_from_json(json::parse(R"({"table": [[0,1],[1,1]]})")), NotAGroup);
}

TEST(Io, GroupFilesAndNames) {
    auto path = write_temp("z2.json", R"({"order": 2, "table": [[0,1],[1,0]]})");
    EXPECT_EQ(load_group(path).order(), 2);
    EXPECT_EQ(load_group("Q8").order(), 8);
    EXPECT_EQ(load_group("cyclic:5").order(), 5);
    EXPECT_THROW(load_group("no-such-group"), ParseError);
    auto broken = write_temp("broken.json", "{\"order\": 2, \"table\": [[0,1],");
    EXPECT_THROW(load_json(broken), ParseError);
}

TEST(Io, Modules) {
    auto G = cyclic_group(2);
    auto Z = module_from_json(json::parse(R"({"rank": 1, "torsion": [3], "action": {"1": [[-1,0],[0,2]]}})"), G);
    EXPECT_EQ(Z.dim(), 2);
    EXPECT_EQ(Z.act(1, {4, 1}), (ModElement{-4, 2}));
    EXPECT_THROW(module_from_json(json::parse(R"({"rank": 1, "action": {"1": [[2]]}})"), G), InvalidModule);
    EXPECT_EQ(load_module("Z-", G).act(1, {1}), (ModElement{-1}));
    EXPECT_EQ(load_module("Z/4", G).order(), 4);
    EXPECT_THROW(load_module("Z-", cyclic_group(3)), InvalidModule);
    EXPECT_THROW(load_module("Q", G), ParseError);
}

TEST(Io, CochainRoundTrip) {
    auto G = std::make_shared<const FiniteGroup>(cyclic_group(3));
    auto Z = std::make_shared<const CoeffModule>(0, std::vector<std::int64_t>{3}, 3);
    auto a = cochain_from_json(json::parse(R"({"degree": 2, "values": {"1,1": [1], "1,2": [4]}})"), G, Z);
    EXPECT_TRUE(a.normalized());
    EXPECT_EQ(a.at({1, 2}), (ModElement{1}));
    EXPECT_EQ(cochain_from_json(cochain_to_json(a), G, Z), a);
    auto f = cochain_from_json(json::parse(R"({"degree": 1, "values": {"0": [1]}})"), G, Z);
    EXPECT_FALSE(f.normalized());
    EXPECT_THROW(cochain_from_json(json::parse(R"({"degree": 2, "values": {"1": [1]}})"), G, Z), ParseError);
    EXPECT_THROW(cochain_from_json(json::parse(R"({"degree": 1, "values": {"7": [1]}})"), G, Z), ParseError);
    EXPECT_THROW(cochain_from_json(json::parse(R"({"degree": 1, "values": {"x": [1]}})"), G, Z), ParseError);
}

TEST(Io, CocycleFiles) {
    auto c = cocycle_from_json(json::parse(R"({"G": "Z/2", "N": "Z/2", "e": {"1,1": 1}})"));
    EXPECT_TRUE(validate_nonabelian_cocycle(c).ok);
    EXPECT_EQ(build_extension(c).E.element_order(2), 4);
    auto again = cocycle_from_json(cocycle_to_json(c));
    EXPECT_EQ(again.e, c.e);
    EXPECT_EQ(again.phi, c.phi);
    EXPECT_THROW(cocycle_from_json(json::parse(R"({"G": "Z/2", "N": "Z/3", "phi": {"1": [0,0,1]}})")),
                 NotAHomomorphism);
    EXPECT_THROW(cocycle_from_json(json::parse(R"({"G": "Z/2", "N": "Z/2", "e": {"1,1": 5}})")), ParseError);
}

TEST(Io, PsiSpecs) {
    auto G = cyclic_group(2);
    auto T = std::make_shared<const AutTower>(quaternion8());
    EXPECT_EQ(parse_psi("trivial", G, T).images, (std::vector<int>{0, 0}));
    EXPECT_EQ(parse_psi("#1", G, T).images, all_outer_maps(G, T)[1].images);
    EXPECT_THROW(parse_psi("#9", G, T), ParseError);
    EXPECT_THROW(parse_psi("0,1,2", G, T), ParseError);
    auto G4 = cyclic_group(4);
    // coset 1 has order 2 in Out(Q8); a generator of Z/4 may go there, but not 1 -> 1, 2 -> 1
    EXPECT_THROW(parse_psi("0,1,1,0", G4, T), NotAHomomorphism);
}

TEST(Reports, DeterministicPayloads) {
    RunConfig cfg;
    cfg.trials = 5;
    auto G = std::make_shared<const FiniteGroup>(cyclic_group(2));
    auto T = std::make_shared<const AutTower>(quaternion8());
    auto a = cmd_obstruction(G, all_outer_maps(*G, T), cfg).payload().dump();
    auto b = cmd_obstruction(G, all_outer_maps(*G, T), cfg).payload().dump();
    EXPECT_EQ(a, b);
    auto r = cmd_extensions(G, trivial_outer_map(*G, std::make_shared<const AutTower>(cyclic_group(2))), cfg);
    EXPECT_TRUE(r.ok()) << r.text();
    EXPECT_EQ(r.results["class_count"], 2);
}

TEST(Reports, FailuresMakeReportNotOk) {
    Report rep;
    rep.check("holds", "a", true);
    EXPECT_TRUE(rep.ok());
    rep.check("fails", "b", false, "witness");
    EXPECT_FALSE(rep.ok());
    EXPECT_FALSE(rep.payload()["ok"].get<bool>());
    Report err;
    err.error = "NotAGroup: x";
    EXPECT_FALSE(err.ok());
}

TEST(Reports, CommandsOnSmallInputs) {
    RunConfig cfg;
    auto G = cyclic_group(2);
    auto rep = cmd_cohomology(G, CoeffModule(0, {2}, 2), 2, true, cfg);
    EXPECT_EQ(rep.results["invariant_factors"], json::array({2}));
    EXPECT_TRUE(rep.ok());
    auto triv = cmd_cohomology(cyclic_group(1), CoeffModule(1, {}, 1), 3, true, cfg);
    EXPECT_EQ(triv.results["invariant_factors"], json::array());
    cfg.radius = 5;
    auto d = cmd_defect("heis_sigma2", cfg);
    EXPECT_TRUE(d.ok()) << d.text();
    auto path = write_temp("sec.json", R"({"G": {"table": [[0,1],[1,0]]}, "H": {"table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}, "sigma": [0,1]})");
    auto f = cmd_defect(path, cfg);
    EXPECT_EQ(f.results["defect_group"], json::array({0, 2}));
    EXPECT_TRUE(f.ok()) << f.text();
}
