/// @file estimators.hpp
/// @brief Discrete surrogates for the second-order and gradient estimates:
///        semiconcavity constants, SSH positive parts, gradient decay,
///        semiconcavity decay/preservation, and the Oleinik check.
///
/// Every check packages into an EstimateReport with pass <=> margin <=
/// slack(h) = coefficient * h.  A bound only counts as verified when it
/// passes at two successive grid refinements with shrinking margin; the
/// acceptance harness enforces that discipline.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hjlab/grid.hpp"
#include "hjlab/hamiltonian.hpp"

namespace hjlab {

struct EstimateReport {
    std::string quantity;
    double time = 0.0;
    double measured = 0.0;
    double theoretical_bound = 0.0;
    double margin = 0.0;          // measured - bound
    double slack = 0.0;           // tolerance coefficient * h
    std::string theorem;          // short estimate label
    bool pass = false;            // margin <= slack
};

/// Max over cells, probe arms h in h_set, and directions of the centered
/// second-difference quotient.  Probes are physical lengths and must be
/// grid-representable (integer number of cells per arm, to 1e-9).  In 2D the
/// direction set is the two axes plus, optionally, the two diagonals.
/// Pick probe arms well above the mesh width: a monotone scheme can leave an
/// O(h)-amplitude kink at sonic points whose second difference against an
/// O(h) arm is O(1) noise, while a fixed physical arm averages it out.
double semiconcavity_constant(const ScalarField& u, const std::vector<double>& h_set,
                              bool include_diagonals = true);

/// L^p norm of the positive part of the discrete Laplacian.
double ssh_positive_part(const ScalarField& u, double p);

/// Per positive-time frame: sup |Du| against (gamma')^{1/gamma} tau^{-1/gamma}
/// (osc)^{1/gamma}, with osc the largest frame oscillation of the trajectory.
/// Power-catalog members only (C1t must be 0).
std::vector<EstimateReport> gradient_decay_check(const Trajectory& traj,
                                                 const HamiltonianSpec& H,
                                                 double tol_coeff = 10.0);

/// Per positive-time frame: semiconcavity constant against
/// (1/C4) t^{-1} (sup |Du|)^{2-gamma}; gamma <= 2 members with C4t = 0 only.
/// h_set empty selects the default probe arm 0.375.
std::vector<EstimateReport> semiconcavity_decay_check(const Trajectory& traj,
                                                      const HamiltonianSpec& H,
                                                      std::vector<double> h_set = {},
                                                      double tol_coeff = 10.0);

/// Per frame: semiconcavity constant against c0 + cf_integral(tau) + C4t tau.
std::vector<EstimateReport> semiconcavity_preservation_check(
    const Trajectory& traj, const HamiltonianSpec& H, double c0,
    const std::function<double(double)>& cf_integral,
    std::vector<double> h_set = {}, double tol_coeff = 10.0);

/// Per frame of a 1D conservation-law trajectory: max forward difference
/// quotient of U against (1/C4) t^{-1} ||U||_inf^{2-gamma}, C4 = gamma - 1
/// of the associated Hamiltonian |p|^gamma / gamma.
std::vector<EstimateReport> oleinik_check(const Trajectory& U_traj, double gamma,
                                          double tol_coeff = 10.0);

}  // namespace hjlab
