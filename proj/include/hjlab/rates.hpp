/// @file rates.hpp
/// @brief Vanishing-viscosity sweeps, error splitting, log-log order fitting,
///        and pass/fail rate reports.
///
/// A RateReport's pass rule comes in two forms.  Two-side experiments (closed
/// forms whose order is known exactly) require |fitted - expected| <= tol.
/// One-side experiments test upper bounds, so converging faster than
/// predicted must pass: fitted >= expected - tol.  Pairs whose error is not
/// at least 10x the reference's own estimated error are excluded from the
/// fit and flagged.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hjlab/forward.hpp"
#include "hjlab/grid.hpp"
#include "hjlab/hamiltonian.hpp"

namespace hjlab {

// ---------------------------------------------------------------------------
// Order fitting and error splitting
// ---------------------------------------------------------------------------

/// Least-squares slope of log(error) vs log(parameter); needs >= 3 strictly
/// positive pairs.
double fit_order(const std::vector<std::pair<double, double>>& pairs);

struct SplitError {
    double plus = 0.0;   // ||max(u - ref, 0)||_p
    double minus = 0.0;  // ||max(ref - u, 0)||_p
    double total = 0.0;  // ||u - ref||_p
};
SplitError split_error(const ScalarField& u_eps, const ScalarField& u_ref, double p);

/// Sup over aligned frames of the split L^p errors (the L^inf_t(L^p_x) norms).
SplitError sup_time_errors(const Trajectory& run, const Trajectory& ref, double p);

/// Sup over aligned frames of ||D(a - b)||_p (gradient components stacked;
/// in 2D the pointwise magnitude of the gradient difference enters the norm).
double gradient_error(const Trajectory& a, const Trajectory& b, double p);

// ---------------------------------------------------------------------------
// Sweep driver
// ---------------------------------------------------------------------------

struct SweepProblem {
    const HamiltonianSpec* H = nullptr;
    ScalarField u0;
    Forcing f;                    // nullptr for f == 0
    double T = 1.0;
    std::vector<double> out_times;          // default: 16 uniform times up to T
    // closed-form reference u(x, t); when absent the reference is the
    // inviscid solve on a reference_refine-times finer grid, cell-averaged
    // back, with the doubling guard estimating its own error
    std::function<double(double, double)> reference;
    int reference_refine = 8;
    SolveConfig base;             // epsilon overwritten per ladder entry
};

struct SweepResult {
    std::vector<double> eps;          // sorted descending (ladder order)
    std::vector<Trajectory> runs;     // frames at the output times
    Trajectory reference;             // same grid and times
    double reference_guard = 0.0;     // estimated reference error, 0 = exact
};
/// Run solve_viscous per ladder entry; eps_ladder must be geometric with
/// >= 5 entries for rate fits (shorter ladders allowed for plain error tables).
SweepResult vanishing_viscosity_sweep(const SweepProblem& prob,
                                      const std::vector<double>& eps_ladder);

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct RatePair {
    double param = 0.0;
    double error = 0.0;
    bool included = true;  // false when the reference guard excludes it
};

struct RateReport {
    std::string experiment;
    std::string theorem;              // short estimate label
    double norm_p = 2.0;              // infinity() for sup norms
    bool one_side_part = false;       // plus/minus split norm
    bool gradient = false;
    std::vector<RatePair> pairs;      // sorted by parameter
    double fitted_order = 0.0;
    double expected_order = 0.0;
    double tolerance = 0.0;
    bool one_side_rule = false;
    bool pass = false;
};

/// Assemble a report: apply the reference guard (exclude error < 10 x
/// ref_guard), fit the order on the surviving pairs, apply the pass rule.
RateReport make_rate_report(const std::string& experiment, const std::string& theorem,
                            std::vector<std::pair<double, double>> pairs,
                            double expected_order, double tolerance, bool one_side_rule,
                            double ref_guard = 0.0, double norm_p = 2.0,
                            bool one_side_part = false, bool gradient = false);

}  // namespace hjlab
