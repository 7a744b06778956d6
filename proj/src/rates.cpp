/// @file rates.cpp

#include "hjlab/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hjlab {

double fit_order(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 3)
        throw std::invalid_argument("fit_order: need at least 3 pairs");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [p, e] : pairs) {
        if (p <= 0.0 || e <= 0.0)
            throw std::invalid_argument("fit_order: pairs must be strictly positive");
        const double x = std::log(p), y = std::log(e);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(pairs.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SplitError split_error(const ScalarField& u_eps, const ScalarField& u_ref, double p) {
    if (u_eps.v.size() != u_ref.v.size())
        throw std::invalid_argument("split_error: grids must match");
    ScalarField plus(u_eps.grid), minus(u_eps.grid), diff(u_eps.grid);
    for (std::size_t k = 0; k < u_eps.v.size(); ++k) {
        const double d = u_eps.v[k] - u_ref.v[k];
        diff.v[k] = d;
        plus.v[k] = std::max(d, 0.0);
        minus.v[k] = std::max(-d, 0.0);
    }
    SplitError e;
    e.plus = lp_norm(plus, p);
    e.minus = lp_norm(minus, p);
    e.total = lp_norm(diff, p);
    return e;
}

SplitError sup_time_errors(const Trajectory& run, const Trajectory& ref, double p) {
    if (run.frames.size() != ref.frames.size())
        throw std::invalid_argument("sup_time_errors: trajectories must be aligned");
    SplitError sup;
    for (std::size_t k = 0; k < run.frames.size(); ++k) {
        const SplitError e = split_error(run.frames[k], ref.frames[k], p);
        sup.plus = std::max(sup.plus, e.plus);
        sup.minus = std::max(sup.minus, e.minus);
        sup.total = std::max(sup.total, e.total);
    }
    return sup;
}

double gradient_error(const Trajectory& a, const Trajectory& b, double p) {
    if (a.frames.size() != b.frames.size())
        throw std::invalid_argument("gradient_error: trajectories must be aligned");
    double sup = 0.0;
    for (std::size_t k = 0; k < a.frames.size(); ++k) {
        const auto ga = discrete_gradient(a.frames[k]);
        const auto gb = discrete_gradient(b.frames[k]);
        ScalarField mag(a.grid);
        for (std::size_t i = 0; i < mag.v.size(); ++i) {
            double d = ga[0].v[i] - gb[0].v[i];
            if (a.grid.dim == 2) d = std::hypot(d, ga[1].v[i] - gb[1].v[i]);
            mag.v[i] = std::abs(d);
        }
        sup = std::max(sup, lp_norm(mag, p));
    }
    return sup;
}

namespace {

// cell-average a fine 1D/2D field onto the coarse grid
ScalarField restrict_to(const ScalarField& fine, const Grid& coarse) {
    const Grid& gf = fine.grid;
    const int mx = gf.cells[0] / coarse.cells[0];
    const int my = gf.dim == 2 ? gf.cells[1] / coarse.cells[1] : 1;
    if (mx * coarse.cells[0] != gf.cells[0] ||
        (gf.dim == 2 && my * coarse.cells[1] != gf.cells[1]))
        throw std::invalid_argument("restrict_to: non-integer refinement ratio");
    ScalarField out(coarse);
    out.time_tag = fine.time_tag;
    for (int i = 0; i < coarse.cells[0]; ++i)
        for (int j = 0; j < (coarse.dim == 2 ? coarse.cells[1] : 1); ++j) {
            double s = 0.0;
            for (int a = 0; a < mx; ++a)
                for (int b = 0; b < my; ++b)
                    s += fine(i * mx + a, j * my + b);
            out(i, j) = s / (mx * my);
        }
    return out;
}

Grid refined(const Grid& g, int factor) {
    Grid f = g;
    f.cells[0] *= factor;
    if (g.dim == 2) f.cells[1] *= factor;
    return f;
}

ScalarField sample(const Grid& g, const std::function<double(double, double)>& fn, double t) {
    ScalarField out(g);
    out.time_tag = t;
    for (int i = 0; i < g.cells[0]; ++i)
        for (int j = 0; j < (g.dim == 2 ? g.cells[1] : 1); ++j)
            out(i, j) = fn(g.center(0, i), g.dim == 2 ? g.center(1, j) : t);
    return out;
}

// inviscid reference on a refined grid, cell-averaged back to the coarse one
Trajectory fine_reference(const SweepProblem& prob, int factor,
                          const std::vector<double>& outs) {
    const Grid gf = refined(prob.u0.grid, factor);
    ScalarField u0f(gf);
    // initialize the fine field by sampling nothing but the coarse data is
    // unavailable as a function; use bilinear/periodic interpolation of u0
    const Grid& gc = prob.u0.grid;
    for (int i = 0; i < gf.cells[0]; ++i)
        for (int j = 0; j < (gf.dim == 2 ? gf.cells[1] : 1); ++j) {
            const double x = gf.center(0, i);
            const double y = gf.dim == 2 ? gf.center(1, j) : 0.0;
            // locate in coarse cell-centered coordinates
            auto interp_axis = [&](int axis, double c, int& i0, int& i1, double& w) {
                const double s = (c - gc.lo[axis]) / gc.spacing(axis) - 0.5;
                double fl = std::floor(s);
                i0 = static_cast<int>(fl);
                i1 = i0 + 1;
                w = s - fl;
                const int n = gc.cells[axis];
                i0 = (i0 % n + n) % n;
                i1 = (i1 % n + n) % n;
            };
            int ix0, ix1, iy0 = 0, iy1 = 0;
            double wx, wy = 0.0;
            interp_axis(0, x, ix0, ix1, wx);
            if (gf.dim == 2) interp_axis(1, y, iy0, iy1, wy);
            const double v00 = prob.u0(ix0, iy0), v10 = prob.u0(ix1, iy0);
            const double v01 = prob.u0(ix0, iy1), v11 = prob.u0(ix1, iy1);
            u0f(i, j) = (1 - wx) * ((1 - wy) * v00 + wy * v01) +
                        wx * ((1 - wy) * v10 + wy * v11);
        }
    SolveConfig cfg = prob.base;
    cfg.epsilon = 0.0;
    cfg.T = prob.T;
    cfg.out_times = outs;
    cfg.store_steps = false;
    Trajectory fine = solve_viscous(*prob.H, u0f, prob.f, cfg);
    Trajectory out;
    out.grid = prob.u0.grid;
    out.times = fine.times;
    for (const auto& fr : fine.frames) out.frames.push_back(restrict_to(fr, prob.u0.grid));
    return out;
}

}  // namespace

SweepResult vanishing_viscosity_sweep(const SweepProblem& prob,
                                      const std::vector<double>& eps_ladder) {
    if (!prob.H) throw std::invalid_argument("sweep: Hamiltonian required");
    if (eps_ladder.empty()) throw std::invalid_argument("sweep: empty ladder");
    std::vector<double> outs = prob.out_times;
    if (outs.empty())
        for (int k = 1; k <= 16; ++k) outs.push_back(prob.T * k / 16.0);

    SweepResult res;
    res.eps = eps_ladder;
    for (double eps : eps_ladder) {
        SolveConfig cfg = prob.base;
        cfg.epsilon = eps;
        cfg.T = prob.T;
        cfg.out_times = outs;
        cfg.store_steps = false;
        res.runs.push_back(solve_viscous(*prob.H, prob.u0, prob.f, cfg));
    }

    if (prob.reference) {
        // closed-form reference u(x, t); 1D problems only
        if (prob.u0.grid.dim != 1)
            throw std::invalid_argument("sweep: closed-form references are 1D-only");
        res.reference.grid = prob.u0.grid;
        res.reference.times = res.runs.front().times;
        for (double t : res.reference.times)
            res.reference.frames.push_back(
                sample(prob.u0.grid, prob.reference, t));
        res.reference_guard = 0.0;
    } else {
        res.reference = fine_reference(prob, prob.reference_refine, outs);
        // doubling guard: half-resolution reference estimates the error
        Trajectory half = fine_reference(prob, std::max(1, prob.reference_refine / 2), outs);
        double guard = 0.0;
        for (std::size_t k = 0; k < half.frames.size(); ++k)
            guard = std::max(guard,
                split_error(res.reference.frames[k], half.frames[k],
                            std::numeric_limits<double>::infinity()).total);
        res.reference_guard = guard;
    }
    return res;
}

RateReport make_rate_report(const std::string& experiment, const std::string& theorem,
                            std::vector<std::pair<double, double>> pairs,
                            double expected_order, double tolerance, bool one_side_rule,
                            double ref_guard, double norm_p,
                            bool one_side_part, bool gradient) {
    std::sort(pairs.begin(), pairs.end());
    RateReport rep;
    rep.experiment = experiment;
    rep.theorem = theorem;
    rep.norm_p = norm_p;
    rep.one_side_part = one_side_part;
    rep.gradient = gradient;
    rep.expected_order = expected_order;
    rep.tolerance = tolerance;
    rep.one_side_rule = one_side_rule;

    std::vector<std::pair<double, double>> fitset;
    for (const auto& [p, e] : pairs) {
        RatePair rp;
        rp.param = p;
        rp.error = e;
        rp.included = e >= 10.0 * ref_guard && e > 0.0;
        rep.pairs.push_back(rp);
        if (rp.included) fitset.emplace_back(p, e);
    }
    if (fitset.size() >= 3) {
        rep.fitted_order = fit_order(fitset);
        rep.pass = one_side_rule
                       ? rep.fitted_order >= expected_order - tolerance
                       : std::abs(rep.fitted_order - expected_order) <= tolerance;
    } else {
        rep.fitted_order = std::numeric_limits<double>::quiet_NaN();
        rep.pass = false;
    }
    return rep;
}

}  // namespace hjlab
