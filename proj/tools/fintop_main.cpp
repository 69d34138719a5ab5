// fintop: homology of finite T0 spaces and their monotone quotients.

#include "fintop/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Integer homology of finite T0 spaces via order complexes, "
                 "Hasse-edge contractions, and exact-sequence bookkeeping"};
    app.require_subcommand(1);
    fintop::cli::Streams io{std::cout, std::cerr};

    std::string poset_path, dom_path, cod_path, map_path, edge_spec;
    bool as_json = false;

    auto* info = app.add_subcommand("info", "Basic order-theoretic facts about a poset file");
    info->add_option("poset", poset_path, "poset file")->required();
    info->add_flag("--json", as_json, "emit JSON instead of text");

    auto* hom = app.add_subcommand("homology", "Betti numbers and torsion of a space");
    hom->add_option("poset", poset_path, "poset file")->required();

    auto* contract = app.add_subcommand("contract", "Contract one Hasse edge and report the cokernel");
    contract->add_option("poset", poset_path, "poset file")->required();
    contract->add_option("--edge", edge_spec, "UPPER,LOWER labels of the edge")->required();

    auto add_map_options = [&](CLI::App* cmd) {
        cmd->add_option("--domain", dom_path, "domain poset file")->required();
        cmd->add_option("--codomain", cod_path, "codomain poset file")->required();
        cmd->add_option("--map", map_path, "map file")->required();
    };

    auto* dec = app.add_subcommand("decompose", "Decompose a surjective monotone map into edge contractions");
    add_map_options(dec);
    auto* ver = app.add_subcommand("verify", "Decompose and run every per-trace theorem check");
    add_map_options(ver);
    auto* mon = app.add_subcommand("monotone", "Is the preimage of every connected set connected?");
    add_map_options(mon);
    auto* fac = app.add_subcommand("factorize", "Split a continuous surjection into a monotone part and a discrete-fiber part");
    add_map_options(fac);

    auto* gmin = app.add_subcommand("gminimal", "Does no single edge contraction preserve all homology?");
    gmin->add_option("poset", poset_path, "poset file")->required();

    fintop::cli::SweepArgs sweep_args;
    auto* sw = app.add_subcommand("sweep", "Exhaustive checks over all labeled posets up to a size");
    sw->add_option("--max-n", sweep_args.max_n, "largest element count (<= 6)")->required();
    sw->add_option("--checks", sweep_args.checks, "'default', 'all', or a comma list");
    sw->add_option("--seed", sweep_args.seed, "seed for randomized checks");
    sw->add_option("--jobs", sweep_args.jobs, "worker threads for the sweep");

    CLI11_PARSE(app, argc, argv);

    if (info->parsed()) return fintop::cli::cmd_info(poset_path, as_json, io);
    if (hom->parsed()) return fintop::cli::cmd_homology(poset_path, io);
    if (contract->parsed()) return fintop::cli::cmd_contract(poset_path, edge_spec, io);
    if (dec->parsed()) return fintop::cli::cmd_decompose(dom_path, cod_path, map_path, io);
    if (ver->parsed()) return fintop::cli::cmd_verify(dom_path, cod_path, map_path, io);
    if (mon->parsed()) return fintop::cli::cmd_monotone(dom_path, cod_path, map_path, io);
    if (fac->parsed()) return fintop::cli::cmd_factorize(dom_path, cod_path, map_path, io);
    if (gmin->parsed()) return fintop::cli::cmd_gminimal(poset_path, io);
    if (sw->parsed()) return fintop::cli::cmd_sweep(sweep_args, io);
    return 2;
}
