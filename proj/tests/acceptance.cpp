/// @file acceptance.cpp
/// @brief Acceptance harness: one pass/fail line per criterion, each backed
///        by the corresponding registered experiment at its default
///        (desk-scale) configuration.

#include <chrono>
#include <iostream>
#include <string>

#include "hjlab/experiments.hpp"

namespace {

struct Criterion {
    int number;
    std::string experiment_id;
    std::string summary;
    double time_limit_s;  // <= 0: no per-criterion runtime gate
};

const Criterion kCriteria[] = {
    {1, "stationary-eikonal-rate", "closed-form stationary O(eps) rate + 5h^2 match", 10.0},
    {2, "stationary-linear-rate", "closed-form stationary O(sqrt(eps)) rate", 10.0},
    {3, "viscosity-sup-rate", "two-side sup-norm rate with explicit constant", 0.0},
    {4, "viscosity-plus-rate", "one-side O(eps) plus-part bound and rate", 0.0},
    {5, "viscosity-l1-rate", "L1 rate >= 0.85", 0.0},
    {6, "viscosity-l2-rate", "L2 interpolated rate >= 0.60", 0.0},
    {7, "viscosity-gradient-rate", "gradient L1/L2 rates >= 0.35", 0.0},
    {8, "semiconcavity-exact", "semiconcavity constant 2.0 at t=0.5 + decay checks", 0.0},
    {9, "semiconcavity-preservation", "4 pi^2 bound holds for all frames", 0.0},
    {10, "adjoint-duality", "mass, positivity, duality residual, cross slack", 0.0},
    {11, "lr-stability", "L^r bound for three drift cases", 0.0},
    {12, "godunov-l1-rate", "2D scheme L1 order in [0.85, 1.3]", 300.0},
    {13, "gradient-sharpness", "decay constant attained within 15%, never exceeded", 0.0},
    {14, "oleinik", "one-sided Lipschitz bound post-shock", 0.0},
};

}  // namespace

int main() {
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        const hjlab::Experiment* exp = hjlab::find_experiment(c.experiment_id);
        if (!exp) {
            std::cout << "criterion " << c.number << ": FAIL (experiment "
                      << c.experiment_id << " not registered)\n";
            ++failures;
            continue;
        }
        bool pass = false;
        double elapsed = 0.0;
        std::string note;
        try {
            const auto t0 = std::chrono::steady_clock::now();
            const hjlab::ExperimentOutcome out = exp->run({});
            elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            pass = out.pass;
            if (c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
                pass = false;
                note = " (runtime limit " + std::to_string(c.time_limit_s) + "s exceeded)";
            }
            if (!out.pass)
                for (const auto& line : out.lines)
                    if (line.find("FAILED") != std::string::npos) note += "\n    " + line;
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << " - "
                  << c.summary << " [" << c.experiment_id << ", "
                  << static_cast<int>(elapsed * 1000.0) << " ms]" << note << "\n"
                  << std::flush;
        if (!pass) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
