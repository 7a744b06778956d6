/// @file experiments.hpp
/// @brief Registered experiment suite: each entry wires solvers, estimators,
///        and the rates harness into one named, configurable check with a
///        pass flag and serializable reports.
///
/// The same registry backs the CLI (`run`, `list`, `describe`) and the
/// acceptance harness, so a criterion exercised on the command line runs
/// byte-identical code to the one gating the test suite.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hjlab {

struct ExperimentConfig {
    int cells = 0;                    // primary grid resolution (0 = default)
    std::vector<double> eps_ladder;   // viscosity/Delta ladder override
    double T = -1.0;                  // horizon override (< 0 = default)
    double tolerance = -1.0;          // rate/estimate tolerance override
    std::vector<double> out_times;    // output-time ladder override
    std::string hamiltonian;          // catalog id override where applicable
    std::string outdir;               // empty = no files written
};

struct ExperimentOutcome {
    bool pass = false;
    std::vector<std::string> lines;   // human-readable summary
    nlohmann::json report;            // full machine-readable report
};

struct Experiment {
    std::string id;
    std::string citation;             // estimate anchor, one per experiment
    std::string description;
    std::function<ExperimentOutcome(const ExperimentConfig&)> run;
};

const std::vector<Experiment>& experiment_registry();
const Experiment* find_experiment(const std::string& id);

}  // namespace hjlab
