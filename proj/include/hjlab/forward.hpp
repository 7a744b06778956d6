/// @file forward.hpp
/// @brief Time integration of viscous and inviscid HJ equations, the
///        Hopf-Lax exact oracle, and the 1D conservation-law companion.
///
/// Scheme: monotone local Lax-Friedrichs Hamiltonian
///     Hhat(p-, p+) = H((p-+p+)/2) - (alpha/2)(p+ - p-)
/// per axis, with alpha frozen per step from the current gradient range plus
/// a 10% margin.  Diffusion is backward-Euler (IMEX) by default in 1D; with
/// reduce_alpha on, the LLF dissipation is lowered by the amount the physical
/// viscosity already provides (alpha = max(0, alpha_loc - 2 eps/h)) so that
/// numerical diffusion does not pollute O(eps) rate measurements.

#pragma once

#include <functional>

#include "hjlab/grid.hpp"
#include "hjlab/hamiltonian.hpp"

namespace hjlab {

enum class Scheme { local_lax_friedrichs, upwind_godunov_1d };

struct SolveConfig {
    double epsilon = 0.0;
    double T = 1.0;
    double cfl_safety = 0.4;
    double alpha_margin = 1.1;
    Scheme scheme = Scheme::local_lax_friedrichs;
    bool implicit_diffusion = true;
    bool reduce_alpha = true;
    std::vector<double> out_times;  // frames to record; empty -> {T}
    bool store_steps = false;       // record every step (adjoint input)
};

/// Right-hand side f(x[,y],t); pass nullptr for f == 0.
using Forcing = std::function<double(double, double, double)>;

/// Forward solve of  du/dt - eps Lap u + H(Du) = f.  With eps = 0 this is
/// the inviscid solver.  Throws on CFL-inconsistent configs and aborts with
/// the last stable frame on NaN.
Trajectory solve_viscous(const HamiltonianSpec& H, const ScalarField& u0,
                         const Forcing& f, const SolveConfig& cfg);

/// Hopf-Lax value inf_y { u0(y) + t L((x-y)/t) } over y in [ylo, yhi];
/// coarse scan on ny points refined by golden section to ~1e-10.
double hopf_lax(const HamiltonianSpec& H, const std::function<double(double)>& u0,
                double x, double t, double ylo, double yhi, int ny = 4096);

/// Conservative FV solve of  dU/dt - eps U_xx + (|U|^gamma)_x = 0 on a 1D
/// torus; Godunov flux by default, Engquist-Osher optionally.
Trajectory conservation_law_1d(double gamma, double epsilon, const ScalarField& U0,
                               double T, const std::vector<double>& out_times = {},
                               double cfl_safety = 0.4, bool engquist_osher = false);

}  // namespace hjlab
