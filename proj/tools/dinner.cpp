#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dinner/cli.hpp"
#include "dinner/constructions.hpp"
#include "dinner/solver.hpp"

namespace {

void add_instance(CLI::App* cmd, dinner::Instance& inst)
{
    cmd->add_option("t", inst.t, "number of tables")->required();
    cmd->add_option("s", inst.s, "number of suppliers")->required();
    cmd->add_option("c", inst.c, "number of customers")->required();
    cmd->add_option("sigma", inst.sigma, "suppliers per table")->required();
    cmd->add_option("gamma", inst.gamma, "customers per table")->required();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Business dinner scheduling: bounds, constructions, validation and exact solving"};
    app.require_subcommand(1);

    dinner::Instance inst{0, 0, 0, 0, 0};

    auto* bounds = app.add_subcommand("bounds", "lower and upper bounds for an instance");
    add_instance(bounds, inst);
    bool bounds_json = false;
    bounds->add_flag("--json", bounds_json, "print one JSON object");

    auto* build = app.add_subcommand("build", "construct a feasible schedule");
    add_instance(build, inst);
    dinner::cli::BuildOptions build_opts;
    build_opts.howell_budget = dinner::default_node_budget(dinner::kDefaultHowellBudget);
    build->add_option("--strategy", build_opts.strategy, "construction to use")
        ->check(CLI::IsMember({"auto", "trivial", "sigma1", "howell", "caspar", "prime", "ub1", "ub2", "eucli"}));
    build->add_option("--out", build_opts.out_path, "schedule file to write ('-' for stdout)");
    build->add_option("--budget", build_opts.howell_budget, "node budget for the Howell search");

    auto* validate = app.add_subcommand("validate", "check a schedule file");
    std::string schedule_path;
    validate->add_option("file", schedule_path, "schedule in the canonical JSON format")->required();

    auto* solve = app.add_subcommand("solve", "exact branch-and-bound optimum");
    add_instance(solve, inst);
    dinner::cli::SolveOptions solve_opts;
    solve_opts.node_budget = dinner::default_node_budget();
    solve->add_option("--budget", solve_opts.node_budget, "node budget (default: DINNER_NODE_BUDGET or 5e7)");
    solve->add_option("--timeout", solve_opts.timeout, "time budget in seconds");
    solve->add_option("--max-dinners", solve_opts.max_dinners, "largest dinner count to try");
    solve->add_option("--out", solve_opts.witness_path, "file for the witness schedule");
    solve->add_flag("--json", solve_opts.json, "print one JSON object");

    auto* tables = app.add_subcommand("paper-tables", "recompute the reference bound tables and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dinner::cli::kBadInput;
    }

    if (*bounds)
        return dinner::cli::cmd_bounds(inst, bounds_json, std::cout, std::cerr);
    if (*build)
        return dinner::cli::cmd_build(inst, build_opts, std::cout, std::cerr);
    if (*validate)
        return dinner::cli::cmd_validate(schedule_path, std::cout, std::cerr);
    if (*solve)
        return dinner::cli::cmd_solve(inst, solve_opts, std::cout, std::cerr);
    if (*tables)
        return dinner::cli::cmd_paper_tables(std::cout);
    return dinner::cli::kBadInput;
}
