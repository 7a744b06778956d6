/// @file stationary.cpp

#include "hjlab/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hjlab/tridiag.hpp"

namespace hjlab {

namespace {

struct Workspace {
    std::vector<double> p, lap, sigma, F;
    std::vector<bool> kink;
};

// Cell gradients and Laplacians with Dirichlet ghost elimination.
void stencils(const ScalarField& u, std::vector<double>& p, std::vector<double>& lap) {
    const Grid& g = u.grid;
    const int n = g.cells[0];
    const double h = g.spacing(0);
    for (int i = 0; i < n; ++i) {
        const double um = ghosted(u, i - 1);
        const double up = ghosted(u, i + 1);
        p[i] = (up - um) / (2.0 * h);
        lap[i] = (up - 2.0 * u(i) + um) / (h * h);
    }
}

void fitting_factors(const HamiltonianSpec& H, const std::vector<double>& p,
                     double eps, double h, double delta, bool fitted,
                     std::vector<double>& sigma, std::vector<bool>& kink) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        if (!fitted) { sigma[i] = 1.0; kink[i] = false; continue; }
        const double rs = std::sqrt(p[i] * p[i] + delta * delta);
        const double a = std::abs(H.dphi(rs));
        const double rho = a * h / (2.0 * eps);
        sigma[i] = rho > 1e-10 ? rho / std::tanh(rho) : 1.0;
        kink[i] = false;
    }
    if (!fitted) return;
    // concave kink cells: gradient flips + to - across the cell
    const double rho2 = h / eps;
    const double cusp = rho2 * rho2 / (2.0 * (rho2 + std::exp(-rho2) - 1.0));
    for (int i = 1; i + 1 < n; ++i)
        if (p[i - 1] > 0.0 && p[i + 1] < 0.0) {
            sigma[i] = cusp;
            kink[i] = true;
        }
}

double sup_residual_true(const HamiltonianSpec& H, const ScalarField& u,
                         const ScalarField& f, const Workspace& w,
                         double eps, double lambda) {
    double sup = 0.0;
    for (std::size_t i = 0; i < u.v.size(); ++i) {
        const double r = -eps * w.sigma[i] * w.lap[i] + lambda * u.v[i] +
                         H.eval1(w.p[i]) - f.v[i];
        sup = std::max(sup, std::abs(r));
    }
    return sup;
}

}  // namespace

ScalarField solve_stationary_1d(const HamiltonianSpec& H, const ScalarField& f,
                                const StationaryConfig& cfg) {
    const Grid& g = f.grid;
    if (g.dim != 1 || g.topology != Topology::bounded ||
        g.brule != BoundaryRule::dirichlet)
        throw std::invalid_argument("solve_stationary_1d: 1D Dirichlet grid required");
    if (cfg.epsilon <= 0.0)
        throw std::invalid_argument("solve_stationary_1d: epsilon must be positive");
    if (cfg.lambda < 0.0 || (cfg.lambda == 0.0 && g.brule != BoundaryRule::dirichlet))
        throw std::invalid_argument("solve_stationary_1d: need lambda > 0 or Dirichlet data");

    const int n = g.cells[0];
    const double h = g.spacing(0);
    const double eps = cfg.epsilon;

    // initial guess: warm start if provided, else linear boundary interpolant
    ScalarField u(g);
    if (cfg.initial_guess) {
        if (cfg.initial_guess->v.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("solve_stationary_1d: initial guess grid mismatch");
        u = *cfg.initial_guess;
    } else {
        for (int i = 0; i < n; ++i) {
            const double s = (g.center(0, i) - g.lo[0]) / (g.hi[0] - g.lo[0]);
            u(i) = (1.0 - s) * g.dirichlet[0] + s * g.dirichlet[1];
        }
    }

    Workspace w;
    w.p.resize(n); w.lap.resize(n); w.sigma.resize(n, 1.0); w.F.resize(n);
    w.kink.assign(n, false);

    std::vector<double> lo(n), di(n), up(n), du(n);
    bool frozen = false;
    std::vector<double> sigma_frozen;

    auto smoothed_residual = [&](const ScalarField& uu, Workspace& ww) {
        stencils(uu, ww.p, ww.lap);
        if (!frozen)
            fitting_factors(H, ww.p, eps, h, cfg.delta, cfg.exponential_fitting,
                            ww.sigma, ww.kink);
        else
            ww.sigma = sigma_frozen;
        double nrm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double rs = std::sqrt(ww.p[i] * ww.p[i] + cfg.delta * cfg.delta);
            ww.F[i] = -eps * ww.sigma[i] * ww.lap[i] + cfg.lambda * uu(i) +
                      H.phi(rs) - f.v[i];
            nrm2 += ww.F[i] * ww.F[i];
        }
        return std::sqrt(nrm2);
    };

    // the |p| smoothing leaves a residual floor of order delta at kink cells,
    // so the convergence test allows for it
    const double tol = cfg.newton_tol + 2.0 * cfg.delta;

    double fnorm = smoothed_residual(u, w);
    for (int it = 0; it < cfg.max_iterations; ++it) {
        if (sup_residual_true(H, u, f, w, eps, cfg.lambda) < tol)
            return u;
        if (it == cfg.freeze_after && !frozen) {
            frozen = true;
            sigma_frozen = w.sigma;
        }
        // tridiagonal Jacobian (sigma held fixed within the linearization)
        for (int i = 0; i < n; ++i) {
            const double rs = std::sqrt(w.p[i] * w.p[i] + cfg.delta * cfg.delta);
            const double dH = H.dphi(rs) * w.p[i] / rs;
            const double a = eps * w.sigma[i] / (h * h);
            lo[i] = -a - dH / (2.0 * h);
            di[i] = 2.0 * a + cfg.lambda;
            up[i] = -a + dH / (2.0 * h);
            du[i] = -w.F[i];
        }
        // Dirichlet ghosts u_{-1} = 2 gL - u_0, u_n = 2 gR - u_{n-1}
        di[0] -= lo[0];
        di[n - 1] -= up[n - 1];
        lo[0] = up[n - 1] = 0.0;
        std::vector<double> step = du;
        thomas(lo, di, up, step);

        double lambda_ls = 1.0;
        Workspace wt = w;
        ScalarField ut = u;
        for (int ls = 0; ls < 45; ++ls) {
            for (int i = 0; i < n; ++i) ut.v[i] = u.v[i] + lambda_ls * step[i];
            const double fn = smoothed_residual(ut, wt);
            if (fn < fnorm || lambda_ls < 1e-12) {
                u = ut;
                w = wt;
                fnorm = fn;
                break;
            }
            lambda_ls *= 0.5;
        }
    }
    stencils(u, w.p, w.lap);
    const double res = sup_residual_true(H, u, f, w, eps, cfg.lambda);
    if (res < tol) return u;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", res);
    throw std::runtime_error(std::string("solve_stationary_1d: Newton stagnation, residual ") + buf);
}

}  // namespace hjlab
