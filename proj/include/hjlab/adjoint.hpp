/// @file adjoint.hpp
/// @brief Backward conservative Fokker-Planck solver with drift D_pH(Du_eps),
///        the duality pairing, the cross functional, and L^r stability checks.
///
/// The backward step is the exact transpose of the linearized forward step:
/// implicit diffusion solve first (self-adjoint), then the transpose of the
/// explicit LLF stage, which is a conservative central transport of rho by
/// b = H'(Du) plus a conservative dissipation with the forward scheme's own
/// per-cell alpha.  Consequences, all exact in exact arithmetic: discrete
/// mass is conserved (columns of the step matrix sum to one), rho stays
/// nonnegative whenever the forward stage is monotone (alpha >= |H'|, i.e.
/// the forward solve must run with reduce_alpha = false), and the duality
/// pairing telescopes so the cross-functional inequality carries nonnegative
/// slack on semiconcave solutions.

#pragma once

#include "hjlab/forward.hpp"
#include "hjlab/grid.hpp"
#include "hjlab/hamiltonian.hpp"

namespace hjlab {

struct AdjointProblem {
    const Trajectory* forward = nullptr;  // step-resolved (store_steps = true)
    const HamiltonianSpec* H = nullptr;
    double epsilon = 0.0;
    double tau = 0.0;                     // must be a forward frame time
    ScalarField rho_tau;                  // unit mass, nonnegative
    double alpha_margin = 1.1;            // must match the forward config
    bool reduce_alpha = false;            // must match the forward config
};

/// Gaussian bump of width `width` (default 3h) at x0, normalized to unit
/// discrete mass on a 1D torus.
ScalarField mollified_delta_1d(const Grid& g, double x0, double width = -1.0);

/// Backward solve over the forward trajectory's step ladder; the returned
/// trajectory is forward-ordered and time-aligned with the input.
Trajectory solve_adjoint(const AdjointProblem& prob);

/// Same backward scheme with a prescribed steady drift b (no forward solve);
/// used by the L^r stability experiments.  bx/by take (x, y); by ignored on
/// 1D grids.
Trajectory solve_adjoint_drift(const Grid& g,
                               const std::function<double(double, double)>& bx,
                               const std::function<double(double, double)>& by,
                               double epsilon, double tau, const ScalarField& rho_tau,
                               double cfl_safety = 0.4, double alpha_margin = 1.1);

// ---------------------------------------------------------------------------
// Duality diagnostics
// ---------------------------------------------------------------------------
struct DualityReport {
    double lhs = 0.0;        // <u(tau), rho_tau> - <u(0), rho(0)>
    double rhs = 0.0;        // time quadrature of (D_pH(Du).Du - H(Du) + f) rho
    double residual = 0.0;
    double tolerance = 0.0;  // 20 (h + dt) scale
    bool pass = false;
};
DualityReport duality_identity(const Trajectory& fwd, const Trajectory& rho,
                               const HamiltonianSpec& H, const Forcing& f,
                               double problem_scale);

struct CrossReport {
    double value = 0.0;      // integral of |Du|^gamma rho
    double bound = 0.0;      // (1/C1)[pairing - int f rho + C1t int rho]
    double slack = 0.0;      // bound - value
};
CrossReport cross_functional(const Trajectory& fwd, const Trajectory& rho,
                             const HamiltonianSpec& H, const Forcing& f);

struct LrReport {
    double sup_norm = 0.0;   // sup_t ||rho(t)||_r
    double bound = 0.0;      // ||rho(tau)||_r exp(int ||[(r-1)div b]^-||_inf dt)
    double slack = 0.0;
    double tolerance = 0.0;  // 10 h
    bool pass = false;
};
/// div b by central differences per frame of `drift` (one component field per
/// axis per frame, aligned with rho's times).
LrReport lr_stability_check(const Trajectory& rho,
                            const std::vector<std::vector<ScalarField>>& drift,
                            double r);

}  // namespace hjlab
