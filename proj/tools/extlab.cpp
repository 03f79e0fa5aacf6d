#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "extlab/extlab.hpp"

using namespace extlab;

namespace {

struct Cli {
    RunConfig cfg;
    std::string out;
    std::string format = "text";
};

int emit(const Cli& cli, Report rep, double seconds) {
    rep.seconds = seconds;
    if (cli.format == "json") std::cout << rep.payload().dump(2) << "\n";
    else std::cout << rep.text();
    if (!cli.out.empty()) {
        auto j = rep.payload();
        j["timing_seconds"] = seconds;
        std::ofstream f(cli.out);
        if (!f) {
            std::cerr << "cannot write " << cli.out << "\n";
            return 2;
        }
        f << j.dump(2) << "\n";
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extlab: group extensions, cohomology and obstructions"};
    app.require_subcommand(1);
    app.fallthrough();
    Cli cli;
    app.add_option("--budget-auts", cli.cfg.budget_auts, "automorphism search budget")->check(CLI::PositiveNumber);
    app.add_option("--budget-enum", cli.cfg.budget_enum, "candidate e-table budget")->check(CLI::PositiveNumber);
    app.add_option("--radius", cli.cfg.radius, "window radius for symbolic sections")->check(CLI::PositiveNumber);
    app.add_option("--seed", cli.cfg.seed, "seed for randomized trials");
    app.add_option("--trials", cli.cfg.trials, "re-choice trials per obstruction")->check(CLI::NonNegativeNumber);
    app.add_option("--out", cli.out, "write the JSON report here");
    app.add_option("--format", cli.format, "stdout format")->check(CLI::IsMember({"json", "text"}));

    std::string g_arg, z_arg, n_arg, psi_arg = "trivial", alpha_arg, cocycle_arg, scenario, name;
    int degree = 2, klass = -1;
    bool full = false, all_psi = false;

    auto* coh = app.add_subcommand("cohomology", "invariant factors and representatives of H^n(G, Z)");
    coh->add_option("G", g_arg, "group file or builtin name")->required();
    coh->add_option("Z", z_arg, "module file or Z, Z/n, Z-, Z/n-")->required();
    coh->add_option("n", degree, "degree")->required()->check(CLI::NonNegativeNumber);
    coh->add_flag("--full", full, "use the full bar complex");

    auto* ext = app.add_subcommand("extensions", "classify extensions of G by N inducing psi");
    ext->add_option("G", g_arg, "group file or builtin name");
    ext->add_option("N", n_arg, "group file or builtin name");
    ext->add_option("psi", psi_arg, "trivial, #k, or coset indices c0,c1,...");
    ext->add_option("--cocycle", cocycle_arg, "validate and build a single cocycle file instead");

    auto* obs = app.add_subcommand("obstruction", "obstruction class of (G, N, psi)");
    obs->add_option("G", g_arg, "group file or builtin name")->required();
    obs->add_option("N", n_arg, "group file or builtin name")->required();
    obs->add_option("psi", psi_arg, "trivial, #k, coset indices, or all");

    auto* def = app.add_subcommand("defect", "defect sets of a section");
    def->add_option("scenario", scenario, "heis_sigma1, heis_sigma2, heis_central, direct_product, or a file")
        ->required();

    auto* rea = app.add_subcommand("realize", "realize a 3-class as an obstruction");
    rea->add_option("M", g_arg, "group file or builtin name")->required();
    rea->add_option("alpha", alpha_arg, "cochain file");
    rea->add_option("--coeff", z_arg, "coefficient module")->default_val("Z/2");
    rea->add_option("--class", klass, "use the k-th H^3 generator instead of a file");

    auto* exa = app.add_subcommand("example", "Heisenberg transcripts");
    exa->add_option("name", name, "exmp_5_1 or exmp_5_2")->required();

    auto* self = app.add_subcommand("selftest", "quick battery over every module");

    CLI11_PARSE(app, argc, argv);
    all_psi = psi_arg == "all";

    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    try {
        Report rep;
        if (coh->parsed()) {
            auto G = load_group(g_arg);
            rep = cmd_cohomology(G, load_module(z_arg, G), degree, !full, cli.cfg);
        } else if (ext->parsed()) {
            if (!cocycle_arg.empty()) {
                rep = cmd_extension_of(cocycle_from_json(load_json(cocycle_arg), cli.cfg.budget_auts, cocycle_arg), cli.cfg);
            } else {
                if (g_arg.empty() || n_arg.empty()) throw ParseError("extensions needs G and N, or --cocycle");
                auto G = std::make_shared<const FiniteGroup>(load_group(g_arg));
                auto tower = std::make_shared<const AutTower>(load_group(n_arg), cli.cfg.budget_auts);
                rep = cmd_extensions(G, parse_psi(psi_arg, *G, tower), cli.cfg);
            }
        } else if (obs->parsed()) {
            auto G = std::make_shared<const FiniteGroup>(load_group(g_arg));
            auto tower = std::make_shared<const AutTower>(load_group(n_arg), cli.cfg.budget_auts);
            std::vector<OuterMap> psis = all_psi ? all_outer_maps(*G, tower)
                                                 : std::vector<OuterMap>{parse_psi(psi_arg, *G, tower)};
            rep = cmd_obstruction(G, psis, cli.cfg);
        } else if (def->parsed()) {
            rep = cmd_defect(scenario, cli.cfg);
        } else if (rea->parsed()) {
            auto M = std::make_shared<const FiniteGroup>(load_group(g_arg));
            auto Z = std::make_shared<const CoeffModule>(load_module(z_arg, *M));
            Cochain alpha;
            if (klass >= 0) {
                auto reps = cohomology(M, Z, 3).representatives();
                if (klass >= static_cast<int>(reps.size()))
                    throw ParseError("H^3 has only " + std::to_string(reps.size()) + " generators");
                alpha = reps[klass];
            } else if (!alpha_arg.empty()) {
                alpha = cochain_from_json(load_json(alpha_arg), M, Z, alpha_arg);
            } else {
                alpha = Cochain(M, Z, 3, true);
            }
            rep = cmd_realize(M, alpha, cli.cfg);
        } else if (exa->parsed()) {
            rep = cmd_example(name, cli.cfg);
        } else if (self->parsed()) {
            rep = cmd_selftest(cli.cfg);
        }
        return emit(cli, rep, elapsed());
    } catch (const std::exception& e) {
        Report rep;
        rep.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
        rep.config = cli.cfg.to_json();
        rep.error = e.what();
        std::cerr << e.what() << "\n";
        emit(cli, rep, elapsed());
        return 2;
    }
}
