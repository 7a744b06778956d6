/// @file estimators.cpp

#include "hjlab/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hjlab {

namespace {

double field_max(const ScalarField& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : f.v) m = std::max(m, x);
    return m;
}

double sup_gradient(const ScalarField& u) {
    const auto grad = discrete_gradient(u);
    double m = 0.0;
    for (std::size_t k = 0; k < u.v.size(); ++k) {
        double g = std::abs(grad[0].v[k]);
        if (u.grid.dim == 2) g = std::hypot(grad[0].v[k], grad[1].v[k]);
        m = std::max(m, g);
    }
    return m;
}

double grid_h(const Grid& g) {
    return std::max(g.spacing(0), g.dim == 2 ? g.spacing(1) : 0.0);
}

EstimateReport make_report(std::string quantity, double time, double measured,
                           double bound, double slack, std::string theorem) {
    EstimateReport r;
    r.quantity = std::move(quantity);
    r.time = time;
    r.measured = measured;
    r.theoretical_bound = bound;
    r.margin = measured - bound;
    r.slack = slack;
    r.theorem = std::move(theorem);
    r.pass = r.margin <= slack;
    return r;
}

}  // namespace

double semiconcavity_constant(const ScalarField& u, const std::vector<double>& h_set,
                              bool include_diagonals) {
    if (h_set.empty())
        throw std::invalid_argument("semiconcavity_constant: h_set must be nonempty");
    const Grid& g = u.grid;
    const int ndir = g.dim == 2 ? (include_diagonals ? 4 : 2) : 1;
    double best = -std::numeric_limits<double>::infinity();
    for (double h : h_set) {
        bool representable = false;
        for (int axis = 0; axis < ndir; ++axis) {
            // effective spacing per probe step in this direction
            double eff;
            if (axis < g.dim) {
                eff = g.spacing(axis);
            } else {
                if (std::abs(g.spacing(0) - g.spacing(1)) > 1e-12 * g.spacing(0))
                    continue;  // diagonals need a square mesh
                eff = g.spacing(0) * std::sqrt(2.0);
            }
            const int steps = static_cast<int>(std::llround(h / eff));
            if (steps < 1 || std::abs(steps * eff - h) > 1e-9) continue;
            representable = true;
            best = std::max(best, field_max(second_difference(u, axis, steps)));
        }
        if (!representable)
            throw std::invalid_argument("semiconcavity_constant: probe arm " +
                                        std::to_string(h) + " is not grid-representable");
    }
    return best;
}

double ssh_positive_part(const ScalarField& u, double p) {
    if (p < 1.0) throw std::invalid_argument("ssh_positive_part: p must be >= 1");
    ScalarField lap = discrete_laplacian(u);
    for (double& x : lap.v) x = std::max(x, 0.0);
    return lp_norm(lap, p);
}

std::vector<EstimateReport> gradient_decay_check(const Trajectory& traj,
                                                 const HamiltonianSpec& H,
                                                 double tol_coeff) {
    if (!H.constants.C1 || H.constants.C1t.value_or(0.0) != 0.0)
        throw std::invalid_argument("gradient_decay_check: needs C1 declared with C1t = 0");
    const double gamma = H.gamma;
    const double gprime = gamma / (gamma - 1.0);
    double osc = 0.0;
    for (const auto& f : traj.frames) osc = std::max(osc, oscillation(f));
    const double slack = tol_coeff * grid_h(traj.grid);

    std::vector<EstimateReport> out;
    for (std::size_t k = 0; k < traj.frames.size(); ++k) {
        const double tau = traj.times[k];
        if (tau <= 0.0) continue;
        const double bound = std::pow(gprime, 1.0 / gamma) *
                             std::pow(tau, -1.0 / gamma) * std::pow(osc, 1.0 / gamma);
        out.push_back(make_report("gradient-decay", tau, sup_gradient(traj.frames[k]),
                                  bound, slack, "sup-norm gradient decay estimate"));
    }
    return out;
}

std::vector<EstimateReport> semiconcavity_decay_check(const Trajectory& traj,
                                                      const HamiltonianSpec& H,
                                                      std::vector<double> h_set,
                                                      double tol_coeff) {
    if (!H.constants.C4 || H.constants.C4t.value_or(0.0) != 0.0)
        throw std::invalid_argument("semiconcavity_decay_check: needs C4 declared with C4t = 0");
    if (H.gamma > 2.0 + 1e-12)
        throw std::invalid_argument("semiconcavity_decay_check: gamma <= 2 members only");
    if (h_set.empty()) h_set = {0.375};
    const double C4 = *H.constants.C4;
    const double slack = tol_coeff * grid_h(traj.grid);

    std::vector<EstimateReport> out;
    for (std::size_t k = 0; k < traj.frames.size(); ++k) {
        const double t = traj.times[k];
        if (t <= 0.0) continue;
        const double measured = semiconcavity_constant(traj.frames[k], h_set);
        const double bound = (1.0 / C4) / t *
                             std::pow(sup_gradient(traj.frames[k]), 2.0 - H.gamma);
        out.push_back(make_report("semiconcavity-decay", t, measured, bound, slack,
                                  "semiconcavity decay estimate"));
    }
    return out;
}

std::vector<EstimateReport> semiconcavity_preservation_check(
    const Trajectory& traj, const HamiltonianSpec& H, double c0,
    const std::function<double(double)>& cf_integral,
    std::vector<double> h_set, double tol_coeff) {
    if (h_set.empty()) h_set = {0.375};
    const double C4t = H.constants.C4t.value_or(0.0);
    const double slack = tol_coeff * grid_h(traj.grid);

    std::vector<EstimateReport> out;
    for (std::size_t k = 0; k < traj.frames.size(); ++k) {
        const double tau = traj.times[k];
        const double measured = semiconcavity_constant(traj.frames[k], h_set);
        const double bound = c0 + (cf_integral ? cf_integral(tau) : 0.0) + C4t * tau;
        out.push_back(make_report("semiconcavity-preservation", tau, measured, bound,
                                  slack, "semiconcavity preservation estimate"));
    }
    return out;
}

std::vector<EstimateReport> oleinik_check(const Trajectory& U_traj, double gamma,
                                          double tol_coeff) {
    const Grid& g = U_traj.grid;
    if (g.dim != 1)
        throw std::invalid_argument("oleinik_check: 1D trajectory required");
    const double h = g.spacing(0);
    // C4 of the associated Hamiltonian |p|^gamma / gamma
    const double C4 = gamma - 1.0;
    const double slack = tol_coeff * h;

    std::vector<EstimateReport> out;
    for (std::size_t k = 0; k < U_traj.frames.size(); ++k) {
        const double t = U_traj.times[k];
        if (t <= 0.0) continue;
        const ScalarField& U = U_traj.frames[k];
        double measured = -std::numeric_limits<double>::infinity();
        double umax = 0.0;
        for (int i = 0; i < g.cells[0]; ++i) {
            measured = std::max(measured, (ghosted(U, i + 1) - U(i)) / h);
            umax = std::max(umax, std::abs(U(i)));
        }
        const double bound = (1.0 / C4) / t * std::pow(umax, 2.0 - gamma);
        out.push_back(make_report("oleinik", t, measured, bound, slack,
                                  "one-sided Lipschitz (Oleinik) bound"));
    }
    return out;
}

}  // namespace hjlab
