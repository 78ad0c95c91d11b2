#include "mdbell/cli.hpp"

#include <CLI11/CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"measurement-dependent local models for the tripartite Bell scenario"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::vector<std::string> budget_args;
    std::string inequality, scenario, grid, out_path;
    std::string mode = "exact";
    std::string format = "text";
    std::string pair_blocks = "tied";
    int l_cap = 2;

    const auto add_output = [&](CLI::App* cmd, const std::string& formats) {
        cmd->add_option("--format", format, "output format: " + formats);
        cmd->add_option("--out", out_path, "write the report to this file");
    };
    const auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode, "numeric mode: exact or real")
            ->check(CLI::IsMember({"exact", "real"}));
    };
    const auto add_inequality = [&](CLI::App* cmd, bool required) {
        auto* opt =
            cmd->add_option("--inequality", inequality, "mermin, svetlichny, or ns2");
        if (required)
            opt->required();
    };
    const auto add_scenario = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--scenario", scenario,
                                    "one-sided:A|B|C or bipartite:AB|BC|AC");
        if (required)
            opt->required();
    };
    const auto add_budgets = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget_args,
                        "dependence budget MEASURE=VALUE, repeatable (example: M1=1/2)");
    };
    const auto add_pair_blocks = [&](CLI::App* cmd) {
        cmd->add_option("--pair-blocks", pair_blocks,
                        "tie ns2 pair terms to full contexts (tied) or give them their own "
                        "hidden-variable distributions (independent)")
            ->check(CLI::IsMember({"tied", "independent"}));
    };

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate model files: S values, dependence report, no-signaling verdict");
    eval->add_option("files", inputs, "model files")->required();
    add_inequality(eval, false);
    add_scenario(eval, false);
    add_budgets(eval);
    add_output(eval, "text or json");

    CLI::App* tables = app.add_subcommand(
        "tables", "rebuild the five catalog models over a parameter grid and check every claim");
    tables->add_option("--grid", grid, "parameter grid lo:hi:step (default 0:1:1/8)");
    add_mode(tables);
    add_output(tables, "text, json, or csv");

    CLI::App* bounds = app.add_subcommand(
        "bounds", "exhaustively verify relaxed bounds against LP maxima over strategies");
    add_inequality(bounds, false);
    add_scenario(bounds, false);
    bounds->add_option("--grid", grid, "budget grid lo:hi:step (default 0:2:1/2)");
    bounds->add_option("--L", l_cap, "hidden-variable count (1 or 2)");
    add_mode(bounds);
    add_pair_blocks(bounds);
    add_output(bounds, "text, json, or csv");

    CLI::App* quantum = app.add_subcommand(
        "quantum", "optimize GHZ measurement settings for all three inequalities");
    add_output(quantum, "text or json");

    CLI::App* search =
        app.add_subcommand("search", "maximize S by LP for one strategy file under budgets");
    search->add_option("file", inputs, "strategy file")->required();
    add_inequality(search, true);
    add_scenario(search, true);
    add_budgets(search);
    add_mode(search);
    add_pair_blocks(search);
    add_output(search, "text or json");

    CLI::App* complete = app.add_subcommand(
        "complete", "fill in a partial model's missing contexts within dependence budgets");
    complete->add_option("file", inputs, "model file")->required();
    add_budgets(complete);
    add_mode(complete);
    add_output(complete, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Normalize CLI11's varied exit codes: 0 for --help, 2 for usage errors.
        return app.exit(e) == 0 ? 0 : 2;
    }

    mdbell::RunConfig config;
    try {
        config.command = mdbell::parse_command(app.get_subcommands().front()->get_name());
        config.inputs = inputs;
        config.output_path = out_path;
        config.format = mdbell::parse_format(format);
        config.mode =
            mode == "real" ? mdbell::NumericMode::Real : mdbell::NumericMode::Exact;
        if (!inequality.empty())
            config.inequality = mdbell::parse_inequality(inequality);
        if (!scenario.empty())
            config.scenario = mdbell::parse_scenario(scenario);
        for (const std::string& b : budget_args)
            config.budgets.push_back(mdbell::parse_budget(b));
        if (!grid.empty())
            config.grid = mdbell::GridSpec::parse(grid);
        config.l_cap = l_cap;
        config.tie_pair_blocks = pair_blocks != "independent";
    } catch (const mdbell::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return mdbell::run(config, std::cout, std::cerr);
}
