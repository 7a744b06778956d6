/// @file stationary.hpp
/// @brief Damped-Newton boundary-value solver for the 1D stationary problem
///        -eps sigma_i D2 u + lambda u + H(Du) = f  with Dirichlet data.
///
/// The diffusion carries a per-cell exponential fitting factor
/// sigma = rho coth(rho), rho = |H'(p)| h / (2 eps), which removes the
/// O(h^2/eps) boundary/interior-layer truncation error of the plain central
/// scheme; at concave-kink cells (p changes sign from + to -) the factor
/// switches to the layer-peak variant rho^2/(2(rho + e^{-rho} - 1)) with
/// rho = h/eps.  Away from layers (rho -> 0) sigma -> 1 and the scheme is
/// the usual central discretization.  Use an odd cell count when the kink
/// sits at the domain center so a cell center lands on it.

#pragma once

#include <functional>

#include "hjlab/grid.hpp"
#include "hjlab/hamiltonian.hpp"

namespace hjlab {

struct StationaryConfig {
    double epsilon = 0.1;
    double lambda = 0.0;
    double newton_tol = 1e-10;      // sup norm of the unsmoothed residual
    int max_iterations = 200;
    double delta = 1e-10;           // |p| ~ sqrt(p^2 + delta^2) inside Newton
    int freeze_after = 40;          // iterations before the fitting factors freeze
    bool exponential_fitting = true;
    // warm start (epsilon-continuation); nullptr -> linear boundary interpolant
    const ScalarField* initial_guess = nullptr;
};

/// Solve -eps sigma D2 u + lambda u + H(u') = f on the (bounded, Dirichlet)
/// grid of f.  Throws on stagnation past max_iterations.
ScalarField solve_stationary_1d(const HamiltonianSpec& H, const ScalarField& f,
                                const StationaryConfig& cfg);

}  // namespace hjlab
