/// @file hjlab_main.cpp
/// @brief Command-line front end: run <config>, list, describe <id>.
///
/// Exit codes: 0 all pass flags true; 1 experiment ran but failed a check;
/// 2 config/usage error (with parse diagnostics); 3 numerical failure inside
/// a solver.  HJLAB_OUTPUT_ROOT prepends a root to the configured output
/// directory.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "hjlab/experiments.hpp"

namespace {

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

int cmd_run(const std::string& config_path) {
    boost::property_tree::ptree pt;
    try {
        boost::property_tree::ini_parser::read_ini(config_path, pt);
    } catch (const boost::property_tree::ini_parser_error& e) {
        std::cerr << "config parse error: " << e.message() << " (" << e.filename()
                  << ":" << e.line() << ")\n";
        return 2;
    }

    hjlab::ExperimentConfig cfg;
    std::string id;
    try {
        id = pt.get<std::string>("experiment.id");
        cfg.cells = pt.get<int>("experiment.cells", 0);
        cfg.T = pt.get<double>("experiment.T", -1.0);
        cfg.tolerance = pt.get<double>("experiment.tolerance", -1.0);
        cfg.hamiltonian = pt.get<std::string>("experiment.hamiltonian", "");
        cfg.outdir = pt.get<std::string>("experiment.outdir", "out");
        cfg.eps_ladder = parse_list(pt.get<std::string>("experiment.eps_ladder", ""));
        cfg.out_times = parse_list(pt.get<std::string>("experiment.out_times", ""));
    } catch (const std::exception& e) {
        std::cerr << "config error in " << config_path << ": " << e.what() << "\n";
        return 2;
    }
    for (double e : cfg.eps_ladder)
        if (e <= 0.0) {
            std::cerr << "config error: eps_ladder entries must be positive\n";
            return 2;
        }

    const hjlab::Experiment* exp = hjlab::find_experiment(id);
    if (!exp) {
        std::cerr << "unknown experiment id: " << id << " (see `hjlab list`)\n";
        return 2;
    }
    if (const char* root = std::getenv("HJLAB_OUTPUT_ROOT"); root && *root)
        cfg.outdir = std::string(root) + "/" + cfg.outdir;

    try {
        const hjlab::ExperimentOutcome outcome = exp->run(cfg);
        for (const auto& line : outcome.lines) std::cout << line << "\n";
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << exp->id << "\n";
        return outcome.pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure in " << exp->id << ": " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hjlab: Hamilton-Jacobi estimate laboratory"};
    app.require_subcommand(1);

    std::string config_path, describe_id;
    CLI::App* run = app.add_subcommand("run", "run an experiment from an INI config");
    run->add_option("config", config_path, "path to INI config")->required();
    CLI::App* list = app.add_subcommand("list", "list registered experiments");
    CLI::App* describe = app.add_subcommand("describe", "describe one experiment");
    describe->add_option("id", describe_id, "experiment id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) return cmd_run(config_path);
    if (list->parsed()) {
        for (const auto& e : hjlab::experiment_registry())
            std::cout << e.id << "\t" << e.citation << "\n";
        return 0;
    }
    if (describe->parsed()) {
        const hjlab::Experiment* e = hjlab::find_experiment(describe_id);
        if (!e) {
            std::cerr << "unknown experiment id: " << describe_id << "\n";
            return 2;
        }
        std::cout << e->id << "\n  anchor: " << e->citation << "\n  " << e->description
                  << "\n";
        return 0;
    }
    return 2;
}
