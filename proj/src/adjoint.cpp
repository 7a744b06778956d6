/// @file adjoint.cpp

#include "hjlab/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hjlab/tridiag.hpp"

namespace hjlab {

namespace {

constexpr double kMassTol = 1e-12;

void check_density(const ScalarField& rho) {
    double mass = 0.0;
    for (double x : rho.v) {
        if (x < 0.0)
            throw std::invalid_argument("adjoint: rho_tau must be nonnegative");
        mass += x;
    }
    mass *= rho.grid.cell_volume();
    if (std::abs(mass - 1.0) > kMassTol)
        throw std::invalid_argument("adjoint: rho_tau must have unit mass, got " +
                                    std::to_string(mass));
}

// (I - eps dt Lap)^{-1} on a periodic 1D grid (self-adjoint, so this is both
// the forward diffusion solve and its transpose).
void diffusion_solve_1d(std::vector<double>& w, const Grid& g, double eps, double dt) {
    if (eps <= 0.0) return;
    const double h = g.spacing(0);
    const double r = eps * dt / (h * h);
    thomas_periodic_const(-r, 1.0 + 2.0 * r, -r, w);
}

// Transpose of the explicit LLF stage: conservative central transport by the
// per-cell drift plus conservative dissipation with the per-cell alpha.
void transpose_stage_1d(std::vector<double>& rho, const std::vector<double>& w,
                        const std::vector<double>& drift,
                        const std::vector<double>& alpha, double h, double dt) {
    const int n = static_cast<int>(w.size());
    for (int j = 0; j < n; ++j) {
        const int jp = (j + 1) % n, jm = (j + n - 1) % n;
        const double transport = (drift[jp] * w[jp] - drift[jm] * w[jm]) / (2.0 * h);
        const double dissip = (alpha[jp] * w[jp] - 2.0 * alpha[j] * w[j] +
                               alpha[jm] * w[jm]) / (2.0 * h);
        rho[j] = w[j] + dt * (transport + dissip);
    }
}

}  // namespace

ScalarField mollified_delta_1d(const Grid& g, double x0, double width) {
    if (g.dim != 1) throw std::invalid_argument("mollified_delta_1d: 1D grid required");
    const double h = g.spacing(0);
    const double L = g.hi[0] - g.lo[0];
    const double s = width > 0.0 ? width : 3.0 * h;
    ScalarField rho(g);
    double mass = 0.0;
    for (int i = 0; i < g.cells[0]; ++i) {
        double d = std::abs(g.center(0, i) - x0);
        if (g.topology == Topology::periodic) d = std::min(d, L - d);
        rho(i) = std::exp(-0.5 * (d / s) * (d / s));
        mass += rho(i) * h;
    }
    for (double& x : rho.v) x /= mass;
    return rho;
}

Trajectory solve_adjoint(const AdjointProblem& prob) {
    if (!prob.forward || !prob.H)
        throw std::invalid_argument("solve_adjoint: forward trajectory and Hamiltonian required");
    const Trajectory& fwd = *prob.forward;
    const Grid& g = fwd.grid;
    if (g.dim != 1 || g.topology != Topology::periodic)
        throw std::invalid_argument("solve_adjoint: periodic 1D grid required");
    if (fwd.times.size() < 2)
        throw std::invalid_argument("solve_adjoint: step-resolved forward trajectory required "
                                    "(run the forward solve with store_steps)");
    check_density(prob.rho_tau);

    // locate the terminal frame
    std::size_t k_tau = fwd.times.size();
    for (std::size_t k = 0; k < fwd.times.size(); ++k)
        if (std::abs(fwd.times[k] - prob.tau) <= 1e-12) k_tau = k;
    if (k_tau == fwd.times.size())
        throw std::invalid_argument("solve_adjoint: tau is not a forward frame time");

    const int n = g.cells[0];
    const double h = g.spacing(0);
    std::vector<double> drift(n), alpha(n);

    Trajectory out;
    out.grid = g;
    out.times.assign(fwd.times.begin(), fwd.times.begin() + k_tau + 1);
    out.frames.resize(k_tau + 1, ScalarField(g));
    out.frames[k_tau] = prob.rho_tau;
    out.frames[k_tau].time_tag = prob.tau;

    std::vector<double> rho = prob.rho_tau.v;
    for (std::size_t k = k_tau; k >= 1; --k) {
        const double dt = fwd.times[k] - fwd.times[k - 1];
        const ScalarField& u = fwd.frames[k - 1];

        // diffusion transpose first: w = (I - eps dt Lap)^{-1} rho
        std::vector<double> w = rho;
        diffusion_solve_1d(w, g, prob.epsilon, dt);

        // frozen linearization coefficients of the forward LLF stage at u^{k-1}
        for (int i = 0; i < n; ++i) {
            const double pp = (ghosted(u, i + 1) - u(i)) / h;
            const double pm = (u(i) - ghosted(u, i - 1)) / h;
            const double pc = 0.5 * (pp + pm);
            double a = prob.alpha_margin *
                       std::max({std::abs(prob.H->grad1(pp)), std::abs(prob.H->grad1(pm)),
                                 std::abs(prob.H->grad1(pc))});
            if (prob.reduce_alpha && prob.epsilon > 0.0)
                a = std::max(0.0, a - 2.0 * prob.epsilon / h);
            drift[i] = prob.H->grad1(pc);
            alpha[i] = a;
        }
        transpose_stage_1d(rho, w, drift, alpha, h, dt);

        out.frames[k - 1].v = rho;
        out.frames[k - 1].time_tag = fwd.times[k - 1];
    }
    return out;
}

Trajectory solve_adjoint_drift(const Grid& g,
                               const std::function<double(double, double)>& bx,
                               const std::function<double(double, double)>& by,
                               double epsilon, double tau, const ScalarField& rho_tau,
                               double cfl_safety, double alpha_margin) {
    if (g.topology != Topology::periodic)
        throw std::invalid_argument("solve_adjoint_drift: periodic grid required");
    if (tau <= 0.0) throw std::invalid_argument("solve_adjoint_drift: tau must be positive");
    check_density(rho_tau);

    const int nx = g.cells[0];
    const int ny = g.dim == 2 ? g.cells[1] : 1;
    const double hx = g.spacing(0);
    const double hy = g.dim == 2 ? g.spacing(1) : 1.0;
    const double hmin = g.dim == 2 ? std::min(hx, hy) : hx;

    // steady drift: sample once
    std::vector<double> BX(g.size()), BY(g.size()), AX(g.size()), AY(g.size());
    double amax = 1e-10;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const double x = g.center(0, i);
            const double y = g.dim == 2 ? g.center(1, j) : 0.0;
            const std::size_t k = g.idx(i, j);
            BX[k] = bx ? bx(x, y) : 0.0;
            BY[k] = (g.dim == 2 && by) ? by(x, y) : 0.0;
            AX[k] = alpha_margin * std::abs(BX[k]);
            AY[k] = alpha_margin * std::abs(BY[k]);
            amax = std::max({amax, AX[k], AY[k]});
        }

    double dt_base = cfl_safety * hmin / (g.dim * amax);
    if (epsilon > 0.0 && g.dim == 2)
        dt_base = std::min(dt_base, cfl_safety * hmin * hmin / (4.0 * epsilon));
    dt_base = std::min(dt_base, tau / 16.0);  // keep a usable time ladder

    Trajectory out;
    out.grid = g;
    ScalarField rho = rho_tau;
    rho.time_tag = tau;
    out.times.push_back(tau);
    out.frames.push_back(rho);

    double t = tau;
    std::vector<double> w(g.size()), next(g.size());
    while (t > 1e-14) {
        const double dt = std::min(dt_base, t);

        w = rho.v;
        if (epsilon > 0.0) {
            if (g.dim == 1) {
                diffusion_solve_1d(w, g, epsilon, dt);
            } else {
                // explicit diffusion (dt already restricted above)
                for (int i = 0; i < nx; ++i)
                    for (int j = 0; j < ny; ++j) {
                        const double lap =
                            (ghosted2(rho, i + 1, j) - 2.0 * rho(i, j) + ghosted2(rho, i - 1, j)) / (hx * hx) +
                            (ghosted2(rho, i, j + 1) - 2.0 * rho(i, j) + ghosted2(rho, i, j - 1)) / (hy * hy);
                        w[g.idx(i, j)] = rho(i, j) + dt * epsilon * lap;
                    }
            }
        }

        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) {
                const std::size_t k = g.idx(i, j);
                const std::size_t kxp = g.idx((i + 1) % nx, j), kxm = g.idx((i + nx - 1) % nx, j);
                double rate = (BX[kxp] * w[kxp] - BX[kxm] * w[kxm]) / (2.0 * hx) +
                              (AX[kxp] * w[kxp] - 2.0 * AX[k] * w[k] + AX[kxm] * w[kxm]) / (2.0 * hx);
                if (g.dim == 2) {
                    const std::size_t kyp = g.idx(i, (j + 1) % ny), kym = g.idx(i, (j + ny - 1) % ny);
                    rate += (BY[kyp] * w[kyp] - BY[kym] * w[kym]) / (2.0 * hy) +
                            (AY[kyp] * w[kyp] - 2.0 * AY[k] * w[k] + AY[kym] * w[kym]) / (2.0 * hy);
                }
                next[k] = w[k] + dt * rate;
            }

        rho.v = next;
        t -= dt;
        rho.time_tag = t;
        out.times.push_back(t);
        out.frames.push_back(rho);
    }
    std::reverse(out.times.begin(), out.times.end());
    std::reverse(out.frames.begin(), out.frames.end());
    return out;
}

// ============================================================================
// Duality diagnostics
// ============================================================================
namespace {

double inner(const ScalarField& a, const ScalarField& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.v.size(); ++k) s += a.v[k] * b.v[k];
    return s * a.grid.cell_volume();
}

// per-cell running-cost density  D_pH(Du).Du - H(Du) + f  at frame time t
double cost_density(const HamiltonianSpec& H, const ScalarField& u, int i, int j,
                    const Forcing& f, double t) {
    const Grid& g = u.grid;
    double q;
    if (g.dim == 1) {
        const double p = (ghosted(u, i + 1) - ghosted(u, i - 1)) / (2.0 * g.spacing(0));
        q = H.grad1(p) * p - H.eval1(p);
    } else {
        const double px = (ghosted2(u, i + 1, j) - ghosted2(u, i - 1, j)) / (2.0 * g.spacing(0));
        const double py = (ghosted2(u, i, j + 1) - ghosted2(u, i, j - 1)) / (2.0 * g.spacing(1));
        const auto dp = H.grad2(px, py);
        q = dp[0] * px + dp[1] * py - H.eval2(px, py);
    }
    if (f) q += f(g.center(0, i), g.dim == 2 ? g.center(1, j) : 0.0, t);
    return q;
}

}  // namespace

DualityReport duality_identity(const Trajectory& fwd, const Trajectory& rho,
                               const HamiltonianSpec& H, const Forcing& f,
                               double problem_scale) {
    if (rho.times.size() < 2 || fwd.times.size() < rho.times.size())
        throw std::invalid_argument("duality_identity: aligned step-resolved trajectories required");
    const Grid& g = fwd.grid;
    const std::size_t N = rho.times.size() - 1;

    DualityReport rep;
    rep.lhs = inner(fwd.frames[N], rho.frames[N]) - inner(fwd.frames[0], rho.frames[0]);

    double dtmax = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        const double dt = rho.times[n + 1] - rho.times[n];
        dtmax = std::max(dtmax, dt);
        const ScalarField& u = fwd.frames[n];
        const ScalarField& r = rho.frames[n];
        double s = 0.0;
        for (int i = 0; i < g.cells[0]; ++i)
            for (int j = 0; j < (g.dim == 2 ? g.cells[1] : 1); ++j)
                s += cost_density(H, u, i, j, f, rho.times[n]) * r(i, j);
        rep.rhs += dt * s * g.cell_volume();
    }
    const double h = std::max(g.spacing(0), g.dim == 2 ? g.spacing(1) : 0.0);
    rep.residual = rep.lhs - rep.rhs;
    rep.tolerance = 20.0 * (h + dtmax) * problem_scale;
    rep.pass = std::abs(rep.residual) <= rep.tolerance;
    return rep;
}

CrossReport cross_functional(const Trajectory& fwd, const Trajectory& rho,
                             const HamiltonianSpec& H, const Forcing& f) {
    if (!H.constants.C1)
        throw std::invalid_argument("cross_functional: Hamiltonian must declare C1");
    const Grid& g = fwd.grid;
    const std::size_t N = rho.times.size() - 1;
    const double C1 = *H.constants.C1;
    const double C1t = H.constants.C1t.value_or(0.0);

    CrossReport rep;
    const double pairing = inner(fwd.frames[N], rho.frames[N]) - inner(fwd.frames[0], rho.frames[0]);
    double forcing_term = 0.0, mass_term = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        const double dt = rho.times[n + 1] - rho.times[n];
        const ScalarField& u = fwd.frames[n];
        const ScalarField& r = rho.frames[n];
        double sv = 0.0, sf = 0.0, sm = 0.0;
        for (int i = 0; i < g.cells[0]; ++i)
            for (int j = 0; j < (g.dim == 2 ? g.cells[1] : 1); ++j) {
                double pnorm;
                if (g.dim == 1) {
                    pnorm = std::abs((ghosted(u, i + 1) - ghosted(u, i - 1)) / (2.0 * g.spacing(0)));
                } else {
                    const double px = (ghosted2(u, i + 1, j) - ghosted2(u, i - 1, j)) / (2.0 * g.spacing(0));
                    const double py = (ghosted2(u, i, j + 1) - ghosted2(u, i, j - 1)) / (2.0 * g.spacing(1));
                    pnorm = std::hypot(px, py);
                }
                sv += std::pow(pnorm, H.gamma) * r(i, j);
                if (f) sf += f(g.center(0, i), g.dim == 2 ? g.center(1, j) : 0.0, rho.times[n]) * r(i, j);
                sm += r(i, j);
            }
        rep.value += dt * sv * g.cell_volume();
        forcing_term += dt * sf * g.cell_volume();
        mass_term += dt * sm * g.cell_volume();
    }
    rep.bound = (pairing - forcing_term + C1t * mass_term) / C1;
    rep.slack = rep.bound - rep.value;
    return rep;
}

LrReport lr_stability_check(const Trajectory& rho,
                            const std::vector<std::vector<ScalarField>>& drift,
                            double r) {
    if (r < 1.0) throw std::invalid_argument("lr_stability_check: r must be >= 1");
    if (!drift.empty() && drift.size() != rho.times.size())
        throw std::invalid_argument("lr_stability_check: drift frames must align with rho times");
    const Grid& g = rho.grid;
    const std::size_t N = rho.times.size();

    LrReport rep;
    std::vector<double> c(N, 0.0);
    for (std::size_t n = 0; n < N; ++n) {
        rep.sup_norm = std::max(rep.sup_norm, lp_norm(rho.frames[n], r));
        if (drift.empty()) continue;
        // ||[(r-1) div b]^-||_inf by central differences
        const auto& b = drift[n];
        for (int i = 0; i < g.cells[0]; ++i)
            for (int j = 0; j < (g.dim == 2 ? g.cells[1] : 1); ++j) {
                double div;
                if (g.dim == 1) {
                    div = (ghosted(b[0], i + 1) - ghosted(b[0], i - 1)) / (2.0 * g.spacing(0));
                } else {
                    div = (ghosted2(b[0], i + 1, j) - ghosted2(b[0], i - 1, j)) / (2.0 * g.spacing(0)) +
                          (ghosted2(b[1], i, j + 1) - ghosted2(b[1], i, j - 1)) / (2.0 * g.spacing(1));
                }
                c[n] = std::max(c[n], std::max(0.0, -(r - 1.0) * div));
            }
    }
    double integral = 0.0;
    for (std::size_t n = 0; n + 1 < N; ++n)
        integral += 0.5 * (c[n] + c[n + 1]) * (rho.times[n + 1] - rho.times[n]);

    const double h = std::max(g.spacing(0), g.dim == 2 ? g.spacing(1) : 0.0);
    rep.bound = lp_norm(rho.frames[N - 1], r) * std::exp(integral);
    rep.slack = rep.bound - rep.sup_norm;
    rep.tolerance = 10.0 * h;
    rep.pass = rep.slack >= -rep.tolerance;
    return rep;
}

}  // namespace hjlab
