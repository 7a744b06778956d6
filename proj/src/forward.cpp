/// @file forward.cpp

#include "hjlab/forward.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hjlab/tridiag.hpp"

namespace hjlab {

namespace {

// Backward-Euler diffusion solve (I - eps dt Lap) u = rhs on a 1D grid.
void implicit_diffusion_1d(std::vector<double>& u, const Grid& g, double eps, double dt) {
    const int n = g.cells[0];
    const double h = g.spacing(0);
    const double r = eps * dt / (h * h);
    if (g.topology == Topology::periodic) {
        thomas_periodic_const(-r, 1.0 + 2.0 * r, -r, u);
        return;
    }
    std::vector<double> lo(n, -r), di(n, 1.0 + 2.0 * r), up(n, -r);
    if (g.brule == BoundaryRule::linear_extrapolation) {
        // ghost u_{-1} = 2u_0 - u_1 makes the boundary Laplacian vanish
        di[0] = 1.0; up[0] = 0.0;
        di[n - 1] = 1.0; lo[n - 1] = 0.0;
    } else {
        // ghost u_{-1} = 2g - u_0
        di[0] = 1.0 + 3.0 * r;
        u[0] += 2.0 * r * g.dirichlet[0];
        di[n - 1] = 1.0 + 3.0 * r;
        u[n - 1] += 2.0 * r * g.dirichlet[1];
    }
    thomas(lo, di, up, u);
}

// Godunov numerical Hamiltonian for a convex H with minimum at p = 0.
double godunov_hat(const HamiltonianSpec& H, double pm, double pp) {
    if (pm <= pp) {
        if (pm <= 0.0 && pp >= 0.0) return H.eval1(0.0);
        return std::min(H.eval1(pm), H.eval1(pp));
    }
    return std::max(H.eval1(pm), H.eval1(pp));
}

struct StepResult {
    double amax = 0.0;  // max |H'| used for CFL
};

// One explicit Hamiltonian (+ optional explicit diffusion) stage, 1D.
StepResult hamiltonian_stage_1d(const HamiltonianSpec& H, const ScalarField& u,
                                std::vector<double>& rhs, const Forcing& f,
                                double t, const SolveConfig& cfg) {
    const Grid& g = u.grid;
    const int n = g.cells[0];
    const double h = g.spacing(0);
    StepResult res;
    for (int i = 0; i < n; ++i) {
        const double pp = (ghosted(u, i + 1) - u(i)) / h;
        const double pm = (u(i) - ghosted(u, i - 1)) / h;
        const double pc = 0.5 * (pp + pm);
        double Hhat;
        double aloc = cfg.alpha_margin *
                      std::max({std::abs(H.grad1(pp)), std::abs(H.grad1(pm)),
                                std::abs(H.grad1(pc))});
        res.amax = std::max(res.amax, aloc);
        if (cfg.scheme == Scheme::upwind_godunov_1d) {
            Hhat = godunov_hat(H, pm, pp);
        } else {
            double alpha = aloc;
            if (cfg.reduce_alpha && cfg.epsilon > 0.0)
                alpha = std::max(0.0, aloc - 2.0 * cfg.epsilon / h);
            Hhat = H.eval1(pc) - 0.5 * alpha * (pp - pm);
        }
        double rate = -Hhat;
        if (f) rate += f(g.center(0, i), 0.0, t);
        rhs[i] = rate;
    }
    return res;
}

StepResult hamiltonian_stage_2d(const HamiltonianSpec& H, const ScalarField& u,
                                std::vector<double>& rhs, const Forcing& f,
                                double t, const SolveConfig& cfg) {
    const Grid& g = u.grid;
    const int nx = g.cells[0], ny = g.cells[1];
    const double hx = g.spacing(0), hy = g.spacing(1);
    StepResult res;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const double pxp = (ghosted2(u, i + 1, j) - u(i, j)) / hx;
            const double pxm = (u(i, j) - ghosted2(u, i - 1, j)) / hx;
            const double pyp = (ghosted2(u, i, j + 1) - u(i, j)) / hy;
            const double pym = (u(i, j) - ghosted2(u, i, j - 1)) / hy;
            const double pcx = 0.5 * (pxp + pxm), pcy = 0.5 * (pyp + pym);
            // axis alphas from the largest one-sided gradient magnitudes
            const double rmax = std::max(std::hypot(std::max(std::abs(pxp), std::abs(pxm)),
                                                    std::max(std::abs(pyp), std::abs(pym))),
                                         1e-14);
            const double dmag = std::abs(H.dphi(rmax));
            const double ax = cfg.alpha_margin * dmag *
                              std::max(std::abs(pxp), std::abs(pxm)) / rmax;
            const double ay = cfg.alpha_margin * dmag *
                              std::max(std::abs(pyp), std::abs(pym)) / rmax;
            res.amax = std::max(res.amax, cfg.alpha_margin * dmag);
            double alphax = ax, alphay = ay;
            if (cfg.reduce_alpha && cfg.epsilon > 0.0) {
                alphax = std::max(0.0, ax - 2.0 * cfg.epsilon / hx);
                alphay = std::max(0.0, ay - 2.0 * cfg.epsilon / hy);
            }
            double Hhat = H.eval2(pcx, pcy) - 0.5 * alphax * (pxp - pxm) -
                          0.5 * alphay * (pyp - pym);
            double rate = -Hhat;
            if (f) rate += f(g.center(0, i), g.center(1, j), t);
            rhs[g.idx(i, j)] = rate;
        }
    return res;
}

}  // namespace

Trajectory solve_viscous(const HamiltonianSpec& H, const ScalarField& u0,
                         const Forcing& f, const SolveConfig& cfg) {
    if (!u0.finite()) throw std::invalid_argument("solve_viscous: non-finite initial data");
    if (cfg.T <= 0.0) throw std::invalid_argument("solve_viscous: T must be positive");
    if (cfg.cfl_safety <= 0.0 || cfg.cfl_safety > 1.0)
        throw std::invalid_argument("solve_viscous: cfl_safety outside (0,1]");
    const Grid& g = u0.grid;
    if (g.dim == 2 && cfg.epsilon > 0.0 && cfg.implicit_diffusion)
        throw std::invalid_argument("solve_viscous: implicit diffusion is 1D-only; "
                                    "use explicit mode on 2D grids");

    std::vector<double> outs = cfg.out_times;
    if (outs.empty()) outs.push_back(cfg.T);
    std::sort(outs.begin(), outs.end());

    Trajectory traj;
    traj.grid = g;
    ScalarField u = u0;
    u.time_tag = 0.0;
    double t = 0.0;
    std::size_t next_out = 0;
    while (next_out < outs.size() && outs[next_out] <= 1e-14) {
        traj.times.push_back(0.0);
        traj.frames.push_back(u);
        ++next_out;
    }
    if (cfg.store_steps && (traj.times.empty() || traj.times.back() != 0.0)) {
        traj.times.push_back(0.0);
        traj.frames.push_back(u);
    }

    const double hmin = g.dim == 2 ? std::min(g.spacing(0), g.spacing(1)) : g.spacing(0);
    std::vector<double> rhs(g.size());

    while (t < cfg.T - 1e-14) {
        StepResult sr = g.dim == 2 ? hamiltonian_stage_2d(H, u, rhs, f, t, cfg)
                                   : hamiltonian_stage_1d(H, u, rhs, f, t, cfg);
        const double amax = std::max(sr.amax, 1e-10);
        double dt = cfg.cfl_safety * hmin / (g.dim * amax);
        if (cfg.epsilon > 0.0 && !cfg.implicit_diffusion)
            dt = std::min(dt, cfg.cfl_safety * hmin * hmin / (2.0 * g.dim * cfg.epsilon));
        dt = std::min(dt, cfg.T - t);
        if (next_out < outs.size()) dt = std::min(dt, outs[next_out] - t);

        ScalarField un = u;
        for (std::size_t k = 0; k < rhs.size(); ++k)
            un.v[k] = u.v[k] + dt * rhs[k];
        if (cfg.epsilon > 0.0) {
            if (cfg.implicit_diffusion) {
                implicit_diffusion_1d(un.v, g, cfg.epsilon, dt);
            } else {
                ScalarField lap = discrete_laplacian(u);
                for (std::size_t k = 0; k < rhs.size(); ++k)
                    un.v[k] += dt * cfg.epsilon * lap.v[k];
            }
        }
        if (!un.finite()) {
            // abort with the last stable frame recorded
            if (traj.times.empty() || traj.times.back() != t) {
                u.time_tag = t;
                traj.times.push_back(t);
                traj.frames.push_back(u);
            }
            throw std::runtime_error("solve_viscous: NaN at t = " + std::to_string(t));
        }
        u = un;
        t += dt;
        u.time_tag = t;

        const bool hit_out = next_out < outs.size() && t >= outs[next_out] - 1e-12;
        if (hit_out) ++next_out;
        if (hit_out || cfg.store_steps) {
            traj.times.push_back(t);
            traj.frames.push_back(u);
        }
    }
    return traj;
}

double hopf_lax(const HamiltonianSpec& H, const std::function<double(double)>& u0,
                double x, double t, double ylo, double yhi, int ny) {
    if (t <= 0.0) throw std::invalid_argument("hopf_lax: t must be positive");
    auto val = [&](double y) { return u0(y) + t * legendre(H, (x - y) / t); };
    int jbest = 0;
    double vbest = 1e300;
    for (int j = 0; j < ny; ++j) {
        const double y = ylo + (yhi - ylo) * j / (ny - 1);
        const double v = val(y);
        if (v < vbest) { vbest = v; jbest = j; }
    }
    const double dy = (yhi - ylo) / (ny - 1);
    double a = ylo + dy * std::max(0, jbest - 1);
    double b = ylo + dy * std::min(ny - 1, jbest + 1);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = val(c1), f2 = val(c2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            b = c2; c2 = c1; f2 = f1;
            c1 = b - gr * (b - a); f1 = val(c1);
        } else {
            a = c1; c1 = c2; f1 = f2;
            c2 = a + gr * (b - a); f2 = val(c2);
        }
    }
    return val(0.5 * (a + b));
}

Trajectory conservation_law_1d(double gamma, double epsilon, const ScalarField& U0,
                               double T, const std::vector<double>& out_times,
                               double cfl_safety, bool engquist_osher) {
    const Grid& g = U0.grid;
    if (g.topology != Topology::periodic || g.dim != 1)
        throw std::invalid_argument("conservation_law_1d: periodic 1D grid required");
    if (cfl_safety <= 0.0 || cfl_safety > 1.0)
        throw std::invalid_argument("conservation_law_1d: cfl_safety outside (0,1]");
    const int n = g.cells[0];
    const double h = g.spacing(0);

    auto flux = [gamma](double u) { return std::pow(std::abs(u), gamma); };

    std::vector<double> outs = out_times;
    if (outs.empty()) outs.push_back(T);
    std::sort(outs.begin(), outs.end());

    Trajectory traj;
    traj.grid = g;
    ScalarField U = U0;
    double t = 0.0;
    std::size_t next_out = 0;
    std::vector<double> F(n), Un(n);
    while (t < T - 1e-14) {
        double amax = 1e-10;
        for (int i = 0; i < n; ++i)
            amax = std::max(amax, gamma * std::pow(std::abs(U(i)), gamma - 1.0));
        double dt = cfl_safety * h / (1.1 * amax);
        if (epsilon > 0.0)
            dt = std::min(dt, cfl_safety * h * h / (2.0 * epsilon));
        dt = std::min(dt, T - t);
        if (next_out < outs.size()) dt = std::min(dt, outs[next_out] - t);

        for (int i = 0; i < n; ++i) {
            const double ul = U(i), ur = U((i + 1) % n);
            if (engquist_osher) {
                F[i] = flux(std::max(ul, 0.0)) + flux(std::min(ur, 0.0)) - flux(0.0);
            } else if (ul <= ur) {
                F[i] = (ul <= 0.0 && ur >= 0.0) ? flux(0.0)
                                                : std::min(flux(ul), flux(ur));
            } else {
                F[i] = std::max(flux(ul), flux(ur));
            }
        }
        for (int i = 0; i < n; ++i) {
            const double Fin = F[(i + n - 1) % n];
            double d2 = 0.0;
            if (epsilon > 0.0)
                d2 = epsilon * (U((i + 1) % n) - 2.0 * U(i) + U((i + n - 1) % n)) / (h * h);
            Un[i] = U(i) - dt / h * (F[i] - Fin) + dt * d2;
        }
        U.v = Un;
        t += dt;
        U.time_tag = t;
        if (next_out < outs.size() && t >= outs[next_out] - 1e-12) {
            traj.times.push_back(t);
            traj.frames.push_back(U);
            ++next_out;
        }
    }
    return traj;
}

}  // namespace hjlab
