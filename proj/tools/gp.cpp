// Command-line driver for the GP interpreter.
//
//   gp run   <program> <host>   one seeded execution, print the result graph
//   gp all   <program> <host>   every result up to isomorphism, with a verdict
//   gp check <program>          parse and static-check only
//   gp trace <program> <host>   like run, plus one line per derivation step

#include "gp/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"gp - interpreter for the GP graph programming language"};
    app.require_subcommand(1);

    std::string program_path;
    std::string host_path;
    gp::CliOptions opt;

    auto add_common = [&](CLI::App* sub, bool needs_host) {
        sub->add_option("program", program_path, "GP program file")->required();
        if (needs_host)
            sub->add_option("host", host_path, "host graph file")->required();
        sub->add_option("--max-steps", opt.budget.max_steps_per_path,
                        "derivation steps allowed on any one path")
            ->capture_default_str();
        sub->add_option("--max-configs", opt.budget.max_configurations,
                        "total configurations explored (shared with nested "
                        "condition checks)")
            ->capture_default_str();
        sub->add_option("--max-results", opt.budget.max_results,
                        "distinct result graphs collected by 'all'")
            ->capture_default_str();
        sub->add_option("--threads", opt.threads, "worker threads for matching")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", opt.json, "machine-readable output");
    };

    CLI::App* run = app.add_subcommand("run", "one nondeterministic execution");
    add_common(run, true);
    run->add_option("--seed", opt.seed, "seed for the nondeterministic choices");

    CLI::App* all =
        app.add_subcommand("all", "all results of the bounded semantic function");
    add_common(all, true);

    CLI::App* check = app.add_subcommand("check", "static checks only");
    add_common(check, false);

    CLI::App* trace =
        app.add_subcommand("trace", "one execution with a step-by-step log");
    add_common(trace, true);
    trace->add_option("--seed", opt.seed, "seed for the nondeterministic choices");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return gp::cmd_run(program_path, host_path, opt, std::cout, std::cerr);
    if (all->parsed())
        return gp::cmd_all(program_path, host_path, opt, std::cout, std::cerr);
    if (check->parsed())
        return gp::cmd_check(program_path, std::cout, std::cerr);
    return gp::cmd_trace(program_path, host_path, opt, std::cout, std::cerr);
}
