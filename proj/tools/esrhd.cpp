#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "esrhd/cases.hpp"
#include "esrhd/config.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/reference_llf.hpp"
#include "esrhd/run.hpp"

using namespace esrhd;

namespace {

RunConfig load(const std::string& file, const std::vector<std::string>& overrides) {
    RunConfig cfg = file.empty() ? RunConfig{} : parse_config_file(file);
    apply_overrides(cfg, overrides);
    validate_config(cfg);
    return cfg;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy-stable finite-difference solver for special relativistic hydrodynamics"};
    app.require_subcommand(1);

    std::string config_file;
    std::vector<std::string> overrides;

    auto* run_cmd = app.add_subcommand("run", "run one configuration");
    run_cmd->add_option("-c,--config", config_file, "key=value config file");
    run_cmd->add_option("overrides", overrides, "key=value overrides");

    std::string ns_text = "10,20,40,80,160";
    auto* sweep_cmd = app.add_subcommand("sweep", "convergence study; writes errors.csv");
    sweep_cmd->add_option("-c,--config", config_file, "key=value config file");
    sweep_cmd->add_option("-n,--resolutions", ns_text, "comma-separated resolutions");
    sweep_cmd->add_option("overrides", overrides, "key=value overrides");

    std::string schemes_text;
    auto* cmp_cmd = app.add_subcommand("compare", "several schemes on one case");
    cmp_cmd->add_option("-c,--config", config_file, "key=value config file");
    cmp_cmd->add_option("-s,--schemes", schemes_text, "comma-separated schemes")->required();
    cmp_cmd->add_option("overrides", overrides, "key=value overrides");

    std::string ref_case, ref_out = "reference.csv";
    int ref_n = 0;
    auto* ref_cmd = app.add_subcommand("reference", "first-order LLF reference for a 1D case");
    ref_cmd->add_option("case", ref_case, "case id")->required();
    ref_cmd->add_option("-n,--resolution", ref_n, "cells (default 10x the case resolution)");
    ref_cmd->add_option("-o,--output", ref_out, "output CSV");

    auto* cases_cmd = app.add_subcommand("cases", "list built-in cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd) {
            const RunOutcome r = run(load(config_file, overrides));
            fmt::print("t = {:.6g}, {} steps\n", r.t, r.steps);
            if (r.errors) fmt::print("l1 = {:.6e}, l2 = {:.6e}\n", r.errors->l1, r.errors->l2);
        } else if (*sweep_cmd) {
            std::vector<int> ns;
            for (const auto& item : split(ns_text)) {
                try {
                    ns.push_back(std::stoi(item));
                } catch (const std::exception&) {
                    throw ConfigError("invalid resolution '" + item + "'");
                }
            }
            for (const auto& row : sweep(load(config_file, overrides), ns))
                fmt::print("{:6d}  l1 {:.4e} {:>6}  l2 {:.4e} {:>6}\n", row.n, row.l1,
                           row.l1_order ? fmt::format("{:.2f}", *row.l1_order) : "-", row.l2,
                           row.l2_order ? fmt::format("{:.2f}", *row.l2_order) : "-");
        } else if (*cmp_cmd) {
            const RunConfig base = load(config_file, overrides);
            std::vector<RunConfig> cfgs;
            for (const auto& s : split(schemes_text)) {
                RunConfig c = base;
                c.scheme = s;
                cfgs.push_back(c);
            }
            for (const auto& r : compare(cfgs))
                fmt::print("t = {:.6g}, {} steps, entropy increases {}\n", r.t, r.steps, r.trace.increases());
        } else if (*ref_cmd) {
            LlfConfig lc;
            lc.case_id = ref_case;
            lc.resolution = ref_n > 0 ? ref_n : 10 * find_case(ref_case).n[0];
            const LlfResult r = llf_solve(lc, ref_out);
            fmt::print("t = {:.6g}, {} steps -> {}\n", r.t, r.steps, ref_out);
        } else if (*cases_cmd) {
            for (const auto& c : catalog()) fmt::print("{:20s} {}\n", c.id, c.description);
        }
    } catch (const DomainError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return exit_code_for(e);
    }
    return 0;
}
