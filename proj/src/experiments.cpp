/// @file experiments.cpp
/// @brief Implementation of the registered experiment suite.

#include "hjlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hjlab/adjoint.hpp"
#include "hjlab/estimators.hpp"
#include "hjlab/forward.hpp"
#include "hjlab/godunov2d.hpp"
#include "hjlab/rates.hpp"
#include "hjlab/report.hpp"
#include "hjlab/stationary.hpp"

namespace hjlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kInf = std::numeric_limits<double>::infinity();

std::vector<double> default_eps_ladder() {
    std::vector<double> l;
    for (int k = 0; k <= 5; ++k) l.push_back(0.1 * std::pow(2.0, -k));
    return l;
}

ScalarField sample1d(const Grid& g, const std::function<double(double)>& fn) {
    ScalarField u(g);
    for (int i = 0; i < g.cells[0]; ++i) u(i) = fn(g.center(0, i));
    return u;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

void emit(const ExperimentConfig& cfg, const std::string& id,
          const nlohmann::json& j,
          const std::vector<std::pair<std::string, std::string>>& files) {
    if (cfg.outdir.empty()) return;
    write_file(cfg.outdir + "/" + id + ".json", j.dump(2) + "\n");
    for (const auto& [name, content] : files)
        write_file(cfg.outdir + "/" + name, content);
}

// ---------------------------------------------------------------------------
// Shared torus sweep: H = p^2/2, u0 = -cos(2 pi x), T = 0.3, exact reference
// by the Hopf-Lax formula.  Cached per (N, ladder) since five experiments
// read the same sweep.
// ---------------------------------------------------------------------------
struct CosSweep {
    SweepResult res;
    double T = 0.3;
    int N = 1024;
    HamiltonianSpec H;
};

const CosSweep& cos_sweep(int N, const std::vector<double>& ladder) {
    static std::map<std::string, CosSweep> cache;
    std::string key = std::to_string(N);
    for (double e : ladder) key += ":" + fmt(e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    CosSweep cs;
    cs.N = N;
    cs.H = make_quadratic();
    SweepProblem prob;
    prob.H = &cs.H;
    prob.u0 = sample1d(Grid::torus1d(N), [](double x) { return -std::cos(2.0 * kPi * x); });
    prob.T = cs.T;
    prob.reference = [&H = cs.H](double x, double t) {
        const double R = 2.0 * kPi * t + 0.5;
        return hopf_lax(H, [](double y) { return -std::cos(2.0 * kPi * y); },
                        x, t, x - R, x + R);
    };
    cs.res = vanishing_viscosity_sweep(prob, ladder);
    return cache.emplace(key, std::move(cs)).first->second;
}

// ---------------------------------------------------------------------------
// Experiment bodies
// ---------------------------------------------------------------------------

// Stationary boundary-layer example: -eps u'' + |u'| = 1 on (-1,1), u(+-1)=0,
// closed form 1 - |x| - eps (e^{-|x|/eps} - e^{-1/eps}); sup error vs the
// inviscid 1 - |x| is eps (1 - e^{-1/eps}), order 1.
ExperimentOutcome run_stationary_eikonal(const ExperimentConfig& cfg) {
    int N = cfg.cells > 0 ? cfg.cells : 511;
    if (N % 2 == 0) ++N;  // odd count puts a cell center on the kink at x = 0
    const std::vector<double> ladder = cfg.eps_ladder.empty() ? default_eps_ladder()
                                                              : cfg.eps_ladder;
    const Grid g = Grid::box1d(N, -1.0, 1.0, BoundaryRule::dirichlet, 0.0, 0.0);
    const double h = g.spacing(0);
    const HamiltonianSpec H = make_eikonal();
    const ScalarField f(g, 1.0);

    ExperimentOutcome out;
    std::vector<std::pair<double, double>> pairs;
    bool closed_ok = true;
    ScalarField warm = sample1d(g, [](double x) { return 1.0 - std::abs(x); });
    for (double eps : ladder) {
        StationaryConfig sc;
        sc.epsilon = eps;
        sc.lambda = 0.0;
        sc.max_iterations = 300;
        sc.initial_guess = &warm;
        const ScalarField u = solve_stationary_1d(H, f, sc);
        double e_closed = 0.0, e_inv = 0.0;
        for (int i = 0; i < N; ++i) {
            const double x = g.center(0, i);
            const double uc = 1.0 - std::abs(x) -
                              eps * (std::exp(-std::abs(x) / eps) - std::exp(-1.0 / eps));
            e_closed = std::max(e_closed, std::abs(u(i) - uc));
            e_inv = std::max(e_inv, std::abs(u(i) - (1.0 - std::abs(x))));
        }
        // the 5h^2 closed-form match is pinned at the anchor eps = 0.1, where
        // the layer is resolved; smaller ladder rungs with eps ~ h only feed
        // the O(eps) rate against the inviscid solution
        const bool anchor = std::abs(eps - 0.1) <= 1e-12;
        if (anchor) closed_ok = closed_ok && e_closed <= 5.0 * h * h;
        pairs.emplace_back(eps, e_inv);
        out.lines.push_back("eps=" + fmt(eps) + " sup|u-closed|=" + fmt(e_closed) +
                            (anchor ? " (anchor, 5h^2=" + fmt(5.0 * h * h) + ")" : "") +
                            " sup|u-inviscid|=" + fmt(e_inv));
        warm = u;
    }
    const double tol = cfg.tolerance >= 0.0 ? cfg.tolerance : 0.1;
    RateReport rep = make_rate_report("stationary-eikonal-rate",
                                      "closed-form stationary boundary-layer example",
                                      pairs, 1.0, tol, /*one_side=*/false, 0.0, kInf);
    out.pass = rep.pass && closed_ok;
    out.lines.push_back("fitted order " + fmt(rep.fitted_order) + " (expected 1.0 +- " +
                        fmt(tol) + "), closed-form match " + (closed_ok ? "ok" : "FAILED"));
    out.report = to_json(rep);
    out.report["closed_form_within_5h2"] = closed_ok;
    emit(cfg, "stationary-eikonal-rate", out.report,
         {{"stationary-eikonal-rate.csv", rate_csv(rep)},
          {"stationary-eikonal-rate.dat", plot_data(rep)}});
    return out;
}

// Linear stationary example: -eps u'' + u = 0 on (0,1) with boundary data
// from the closed form sqrt(eps) cosh((x-1/2)/sqrt(eps)) / sinh(1/(2 sqrt(eps)));
// sup error vs the inviscid u = 0 has order 1/2.
ExperimentOutcome run_stationary_linear(const ExperimentConfig& cfg) {
    int N = cfg.cells > 0 ? cfg.cells : 511;
    if (N % 2 == 0) ++N;  // cell center at x = 1/2 for the closed-form probe
    const std::vector<double> ladder = cfg.eps_ladder.empty() ? default_eps_ladder()
                                                              : cfg.eps_ladder;
    const HamiltonianSpec H = make_zero();

    ExperimentOutcome out;
    std::vector<std::pair<double, double>> pairs;
    double worst_closed = 0.0;
    for (double eps : ladder) {
        const double se = std::sqrt(eps);
        auto closed = [se](double x) {
            return se * std::cosh((x - 0.5) / se) / std::sinh(0.5 / se);
        };
        const Grid g = Grid::box1d(N, 0.0, 1.0, BoundaryRule::dirichlet,
                                   closed(0.0), closed(1.0));
        const ScalarField f(g, 0.0);
        StationaryConfig sc;
        sc.epsilon = eps;
        sc.lambda = 1.0;
        const ScalarField u = solve_stationary_1d(H, f, sc);
        double e_inv = 0.0, e_closed = 0.0;
        for (int i = 0; i < N; ++i) {
            e_inv = std::max(e_inv, std::abs(u(i)));
            e_closed = std::max(e_closed, std::abs(u(i) - closed(g.center(0, i))));
        }
        worst_closed = std::max(worst_closed, e_closed);
        pairs.emplace_back(eps, e_inv);
        out.lines.push_back("eps=" + fmt(eps) + " sup|u|=" + fmt(e_inv) +
                            " sup|u-closed|=" + fmt(e_closed));
    }
    const double tol = cfg.tolerance >= 0.0 ? cfg.tolerance : 0.1;
    RateReport rep = make_rate_report("stationary-linear-rate",
                                      "closed-form linear stationary example",
                                      pairs, 0.5, tol, /*one_side=*/false, 0.0, kInf);
    out.pass = rep.pass;
    out.lines.push_back("fitted order " + fmt(rep.fitted_order) + " (expected 0.5 +- " +
                        fmt(tol) + ")");
    out.report = to_json(rep);
    out.report["worst_closed_form_error"] = worst_closed;
    emit(cfg, "stationary-linear-rate", out.report,
         {{"stationary-linear-rate.csv", rate_csv(rep)},
          {"stationary-linear-rate.dat", plot_data(rep)}});
    return out;
}

// helper shared by the five torus-rate experiments
const CosSweep& torus_sweep_for(const ExperimentConfig& cfg) {
    const int N = cfg.cells > 0 ? cfg.cells : 1024;
    return cos_sweep(N, cfg.eps_ladder.empty() ? default_eps_ladder() : cfg.eps_ladder);
}

ExperimentOutcome run_viscosity_sup(const ExperimentConfig& cfg) {
    const CosSweep& cs = torus_sweep_for(cfg);
    const double h = cs.res.reference.grid.spacing(0);
    ExperimentOutcome out;
    std::vector<std::pair<double, double>> pairs;
    bool const_ok = true;
    for (std::size_t k = 0; k < cs.res.eps.size(); ++k) {
        const double eps = cs.res.eps[k];
        const SplitError e = sup_time_errors(cs.res.runs[k], cs.res.reference, kInf);
        // explicit constant: 2 sqrt(2 n T ||Du0||_inf) sqrt(eps) + 10h, n = 1
        const double bound = 2.0 * std::sqrt(2.0 * cs.T * 2.0 * kPi) * std::sqrt(eps) + 10.0 * h;
        const_ok = const_ok && e.total <= bound;
        pairs.emplace_back(eps, e.total);
        out.lines.push_back("eps=" + fmt(eps) + " sup error=" + fmt(e.total) +
                            " explicit bound=" + fmt(bound));
    }
    // acceptance window [0.35, 1.3] expressed as midpoint +- halfwidth
    RateReport rep = make_rate_report("viscosity-sup-rate",
                                      "two-side sup-norm vanishing-viscosity estimate",
                                      pairs, 0.825, cfg.tolerance >= 0.0 ? cfg.tolerance : 0.475,
                                      /*one_side=*/false, 0.0, kInf);
    out.pass = rep.pass && const_ok;
    out.lines.push_back("fitted order " + fmt(rep.fitted_order) +
                        " (window [0.35,1.3]); explicit constant " +
                        (const_ok ? "ok" : "FAILED"));
    out.report = to_json(rep);
    out.report["explicit_constant_ok"] = const_ok;
    emit(cfg, "viscosity-sup-rate", out.report,
         {{"viscosity-sup-rate.csv", rate_csv(rep)},
          {"viscosity-sup-rate.dat", plot_data(rep)}});
    return out;
}

ExperimentOutcome run_viscosity_plus(const ExperimentConfig& cfg) {
    const CosSweep& cs = torus_sweep_for(cfg);
    const double h = cs.res.reference.grid.spacing(0);
    ExperimentOutcome out;
    std::vector<std::pair<double, double>> pairs;
    bool const_ok = true;
    for (std::size_t k = 0; k < cs.res.eps.size(); ++k) {
        const double eps = cs.res.eps[k];
        const SplitError e = sup_time_errors(cs.res.runs[k], cs.res.reference, kInf);
        const double bound = 4.0 * kPi * kPi * cs.T * eps + 10.0 * h;  // ||(D2 u0)^+|| T eps
        const_ok = const_ok && e.plus <= bound;
        pairs.emplace_back(eps, e.plus);
        out.lines.push_back("eps=" + fmt(eps) + " plus-part=" + fmt(e.plus) +
                            " one-side bound=" + fmt(bound));
    }
    RateReport rep = make_rate_report("viscosity-plus-rate",
                                      "one-side O(eps) estimate via the positive Laplacian part",
                                      pairs, 1.0, cfg.tolerance >= 0.0 ? cfg.tolerance : 0.15,
                                      /*one_side=*/true, 0.0, kInf, /*one_side_part=*/true);
    out.pass = rep.pass && const_ok;
    out.lines.push_back("fitted plus order " + fmt(rep.fitted_order) + " (>= 0.85); bound " +
                        (const_ok ? "ok" : "FAILED"));
    out.report = to_json(rep);
    out.report["one_side_constant_ok"] = const_ok;
    emit(cfg, "viscosity-plus-rate", out.report,
         {{"viscosity-plus-rate.csv", rate_csv(rep)},
          {"viscosity-plus-rate.dat", plot_data(rep)}});
    return out;
}

ExperimentOutcome run_viscosity_l1(const ExperimentConfig& cfg) {
    const CosSweep& cs = torus_sweep_for(cfg);
    ExperimentOutcome out;
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t k = 0; k < cs.res.eps.size(); ++k) {
        const SplitError e = sup_time_errors(cs.res.runs[k], cs.res.reference, 1.0);
        pairs.emplace_back(cs.res.eps[k], e.total);
        out.lines.push_back("eps=" + fmt(cs.res.eps[k]) + " L1 error=" + fmt(e.total));
    }
    RateReport rep = make_rate_report("viscosity-l1-rate", "L1 vanishing-viscosity rate",
                                      pairs, 1.0, cfg.tolerance >= 0.0 ? cfg.tolerance : 0.15,
                                      /*one_side=*/true, 0.0, 1.0);
    out.pass = rep.pass;
    out.lines.push_back("fitted L1 order " + fmt(rep.fitted_order) + " (>= 0.85)");
    out.report = to_json(rep);
    emit(cfg, "viscosity-l1-rate", out.report,
         {{"viscosity-l1-rate.csv", rate_csv(rep)},
          {"viscosity-l1-rate.dat", plot_data(rep)}});
    return out;
}

ExperimentOutcome run_viscosity_l2(const ExperimentConfig& cfg) {
    const CosSweep& cs = torus_sweep_for(cfg);
    ExperimentOutcome out;
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t k = 0; k < cs.res.eps.size(); ++k) {
        const SplitError e = sup_time_errors(cs.res.runs[k], cs.res.reference, 2.0);
        pairs.emplace_back(cs.res.eps[k], e.total);
        out.lines.push_back("eps=" + fmt(cs.res.eps[k]) + " L2 error=" + fmt(e.total));
    }
    RateReport rep = make_rate_report("viscosity-l2-rate",
                                      "interpolated L^p vanishing-viscosity rate (p = 2)",
                                      pairs, 0.75, cfg.tolerance >= 0.0 ? cfg.tolerance : 0.15,
                                      /*one_side=*/true, 0.0, 2.0);
    out.pass = rep.pass;
    out.lines.push_back("fitted L2 order " + fmt(rep.fitted_order) + " (>= 0.60)");
    out.report = to_json(rep);
    emit(cfg, "viscosity-l2-rate", out.report,
         {{"viscosity-l2-rate.csv", rate_csv(rep)},
          {"viscosity-l2-rate.dat", plot_data(rep)}});
    return out;
}

ExperimentOutcome run_viscosity_gradient(const ExperimentConfig& cfg) {
    const CosSweep& cs = torus_sweep_for(cfg);
    ExperimentOutcome out;
    out.pass = true;
    out.report = nlohmann::json::array();
    std::vector<std::pair<std::string, std::string>> files;
    for (double p : {1.0, 2.0}) {
        std::vector<std::pair<double, double>> pairs;
        for (std::size_t k = 0; k < cs.res.eps.size(); ++k)
            pairs.emplace_back(cs.res.eps[k],
                               gradient_error(cs.res.runs[k], cs.res.reference, p));
        const std::string id = "viscosity-gradient-rate-l" + fmt(p);
        RateReport rep = make_rate_report(id, "gradient vanishing-viscosity rate",
                                          pairs, 0.5,
                                          cfg.tolerance >= 0.0 ? cfg.tolerance : 0.15,
                                          /*one_side=*/true, 0.0, p, false, /*gradient=*/true);
        out.pass = out.pass && rep.pass;
        out.lines.push_back("L" + fmt(p) + " gradient order " + fmt(rep.fitted_order) +
                            " (>= 0.35)");
        out.report.push_back(to_json(rep));
        files.emplace_back(id + ".csv", rate_csv(rep));
        files.emplace_back(id + ".dat", plot_data(rep));
    }
    emit(cfg, "viscosity-gradient-rate", out.report, files);
    return out;
}

ExperimentOutcome run_semiconcavity_exact(const ExperimentConfig& cfg) {
    const int Nfine = cfg.cells > 0 ? cfg.cells : 1024;
    const HamiltonianSpec H = make_quadratic();
    ExperimentOutcome out;
    out.pass = true;
    out.report = nlohmann::json::array();
    for (int N : {Nfine / 2, Nfine}) {
        const Grid g = Grid::box1d(N, -3.0, 3.0);
        const double h = g.spacing(0);
        SolveConfig sc;
        sc.epsilon = 0.0;
        sc.T = 0.5;
        sc.out_times = {0.1, 0.2, 0.3, 0.4, 0.5};
        const Trajectory traj = solve_viscous(
            H, sample1d(g, [](double x) { return std::abs(x); }), nullptr, sc);
        const double measured = semiconcavity_constant(traj.frames.back(), {0.375});
        const bool exact_ok = std::abs(measured - 2.0) <= 10.0 * h;
        const auto decay = semiconcavity_decay_check(traj, H);
        bool decay_ok = true;
        for (const auto& r : decay) decay_ok = decay_ok && r.pass;
        out.pass = out.pass && exact_ok && decay_ok;
        out.lines.push_back("N=" + std::to_string(N) + " measured(t=0.5)=" + fmt(measured) +
                            " |m-2|=" + fmt(std::abs(measured - 2.0)) + " (10h=" +
                            fmt(10.0 * h) + ") decay-check " + (decay_ok ? "ok" : "FAILED"));
        nlohmann::json jr;
        jr["cells"] = N;
        jr["measured"] = measured;
        jr["exact_ok"] = exact_ok;
        jr["decay"] = to_json(decay);
        out.report.push_back(jr);
        if (!cfg.outdir.empty())
            write_file(cfg.outdir + "/semiconcavity-exact-" + std::to_string(N) + ".csv",
                       estimates_csv(decay));
    }
    emit(cfg, "semiconcavity-exact", out.report, {});
    return out;
}

ExperimentOutcome run_semiconcavity_preservation(const ExperimentConfig& cfg) {
    const int Nfine = cfg.cells > 0 ? cfg.cells : 128;
    const HamiltonianSpec H = make_quadratic();
    const double c0 = 4.0 * kPi * kPi;
    ExperimentOutcome out;
    out.pass = true;
    out.report = nlohmann::json::array();
    for (int N : {Nfine / 2, Nfine}) {
        const Grid g = Grid::torus1d(N);
        SolveConfig sc;
        sc.epsilon = 0.0;
        sc.T = 0.3;
        for (int k = 1; k <= 8; ++k) sc.out_times.push_back(0.3 * k / 8.0);
        const Trajectory traj = solve_viscous(
            H, sample1d(g, [](double x) { return -std::cos(2.0 * kPi * x); }), nullptr, sc);
        const auto reps = semiconcavity_preservation_check(traj, H, c0, nullptr);
        bool ok = true;
        double worst = -1e300;
        for (const auto& r : reps) {
            ok = ok && r.pass;
            worst = std::max(worst, r.margin);
        }
        out.pass = out.pass && ok;
        out.lines.push_back("N=" + std::to_string(N) + " worst margin=" + fmt(worst) +
                            " vs bound " + fmt(c0) + " " + (ok ? "ok" : "FAILED"));
        nlohmann::json jr;
        jr["cells"] = N;
        jr["frames"] = to_json(reps);
        out.report.push_back(jr);
        if (!cfg.outdir.empty())
            write_file(cfg.outdir + "/semiconcavity-preservation-" + std::to_string(N) + ".csv",
                       estimates_csv(reps));
    }
    emit(cfg, "semiconcavity-preservation", out.report, {});
    return out;
}

ExperimentOutcome run_adjoint_duality(const ExperimentConfig& cfg) {
    const int Nfine = cfg.cells > 0 ? cfg.cells : 128;
    const HamiltonianSpec H = make_quadratic();
    const double eps = 0.05, tau = 0.5;
    ExperimentOutcome out;
    out.pass = true;
    out.report = nlohmann::json::array();
    for (int N : {Nfine / 2, Nfine}) {
        const Grid g = Grid::torus1d(N);
        const double h = g.spacing(0);
        SolveConfig sc;
        sc.epsilon = eps;
        sc.T = tau;
        sc.cfl_safety = 0.35;
        sc.reduce_alpha = false;  // full alpha keeps the transposed step monotone
        sc.store_steps = true;
        const Trajectory fwd = solve_viscous(
            H, sample1d(g, [](double x) { return -std::cos(2.0 * kPi * x); }), nullptr, sc);

        AdjointProblem ap;
        ap.forward = &fwd;
        ap.H = &H;
        ap.epsilon = eps;
        ap.tau = tau;
        ap.rho_tau = mollified_delta_1d(g, 0.3);
        const Trajectory rho = solve_adjoint(ap);

        double mass_dev = 0.0, min_rho = 0.0, dtmax = 0.0;
        for (std::size_t k = 0; k < rho.frames.size(); ++k) {
            double m = 0.0;
            for (double x : rho.frames[k].v) {
                m += x;
                min_rho = std::min(min_rho, x);
            }
            mass_dev = std::max(mass_dev, std::abs(m * h - 1.0));
            if (k > 0) dtmax = std::max(dtmax, rho.times[k] - rho.times[k - 1]);
        }
        const DualityReport dual = duality_identity(fwd, rho, H, nullptr, 2.0);
        const CrossReport cross = cross_functional(fwd, rho, H, nullptr);
        const bool ok = mass_dev <= 1e-12 && min_rho >= -1e-14 && dual.pass &&
                        cross.slack >= 0.0;
        out.pass = out.pass && ok;
        out.lines.push_back("N=" + std::to_string(N) + " mass dev=" + fmt(mass_dev) +
                            " min rho=" + fmt(min_rho) + " duality resid=" +
                            fmt(dual.residual) + " (tol " + fmt(dual.tolerance) +
                            ") cross slack=" + fmt(cross.slack) + " " +
                            (ok ? "ok" : "FAILED"));
        nlohmann::json jr;
        jr["cells"] = N;
        jr["mass_deviation"] = mass_dev;
        jr["min_rho"] = min_rho;
        jr["duality"] = {{"lhs", dual.lhs}, {"rhs", dual.rhs}, {"residual", dual.residual},
                         {"tolerance", dual.tolerance}, {"pass", dual.pass}};
        jr["cross"] = {{"value", cross.value}, {"bound", cross.bound}, {"slack", cross.slack}};
        out.report.push_back(jr);
    }
    emit(cfg, "adjoint-duality", out.report, {});
    return out;
}

ExperimentOutcome run_lr_stability(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.pass = true;
    out.report = nlohmann::json::array();
    const int N1 = cfg.cells > 0 ? cfg.cells : 128;

    auto record = [&](const std::string& name, const LrReport& r) {
        out.pass = out.pass && r.pass;
        out.lines.push_back(name + ": sup=" + fmt(r.sup_norm) + " bound=" + fmt(r.bound) +
                            " slack=" + fmt(r.slack) + " (>= -" + fmt(r.tolerance) + ") " +
                            (r.pass ? "ok" : "FAILED"));
        out.report.push_back({{"case", name}, {"sup_norm", r.sup_norm}, {"bound", r.bound},
                              {"slack", r.slack}, {"tolerance", r.tolerance}, {"pass", r.pass}});
    };

    // case 1: zero drift, zero diffusion, r = 2 — the norm is constant
    {
        const Grid g = Grid::torus1d(N1);
        const ScalarField rho_tau = mollified_delta_1d(g, 0.5);
        const Trajectory rho = solve_adjoint_drift(g, nullptr, nullptr, 0.0, 0.5, rho_tau);
        std::vector<std::vector<ScalarField>> drift(rho.times.size(),
                                                    {ScalarField(g, 0.0)});
        record("zero-drift r=2", lr_stability_check(rho, drift, 2.0));
    }
    // case 2: b = sin(2 pi x), eps = 0, r = 2 — exponential factor e^{2 pi tau}
    {
        const Grid g = Grid::torus1d(N1);
        const ScalarField rho_tau = mollified_delta_1d(g, 0.5);
        auto bx = [](double x, double) { return std::sin(2.0 * kPi * x); };
        const Trajectory rho = solve_adjoint_drift(g, bx, nullptr, 0.0, 0.5, rho_tau);
        const ScalarField bfield = sample1d(g, [](double x) { return std::sin(2.0 * kPi * x); });
        std::vector<std::vector<ScalarField>> drift(rho.times.size(), {bfield});
        record("sin-drift r=2", lr_stability_check(rho, drift, 2.0));
    }
    // case 3: divergence-free 2D rotation (Taylor-Green cells), r = 3
    {
        const int N2 = std::min(64, N1);
        const Grid g = Grid::torus2d(N2, N2);
        const double h = g.spacing(0);
        ScalarField rho_tau(g);
        double mass = 0.0;
        for (int i = 0; i < N2; ++i)
            for (int j = 0; j < N2; ++j) {
                auto per = [](double d) { return std::min(std::abs(d), 1.0 - std::abs(d)); };
                const double dx = per(g.center(0, i) - 0.5), dy = per(g.center(1, j) - 0.5);
                rho_tau(i, j) = std::exp(-0.5 * (dx * dx + dy * dy) / (9.0 * h * h));
                mass += rho_tau(i, j);
            }
        for (double& x : rho_tau.v) x /= mass * g.cell_volume();
        auto bx = [](double x, double y) { return std::sin(2.0 * kPi * x) * std::cos(2.0 * kPi * y); };
        auto by = [](double x, double y) { return -std::cos(2.0 * kPi * x) * std::sin(2.0 * kPi * y); };
        const Trajectory rho = solve_adjoint_drift(g, bx, by, 0.01, 0.25, rho_tau);
        ScalarField bxf(g), byf(g);
        for (int i = 0; i < N2; ++i)
            for (int j = 0; j < N2; ++j) {
                bxf(i, j) = bx(g.center(0, i), g.center(1, j));
                byf(i, j) = by(g.center(0, i), g.center(1, j));
            }
        std::vector<std::vector<ScalarField>> drift(rho.times.size(), {bxf, byf});
        record("rotation-2d r=3", lr_stability_check(rho, drift, 3.0));
    }
    emit(cfg, "lr-stability", out.report, {});
    return out;
}

ExperimentOutcome run_godunov_l1(const ExperimentConfig& cfg) {
    const HamiltonianSpec H = make_quadratic();
    std::vector<int> ladder = {16, 24, 32, 48, 64};
    if (cfg.cells > 0) ladder = {cfg.cells / 4, cfg.cells / 2, cfg.cells};
    GodunovConfig base;
    base.fine_factor = 4;
    base.T = cfg.T > 0.0 ? cfg.T : 0.3;

    // separable exact reference: u(x,y,T) = v(x) + v(y) with v the 1D
    // Hopf-Lax evolution of -cos(2 pi .)
    const double T = base.T;
    auto v1d = [&H, T](double x) {
        static std::map<double, double> memo;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        const double R = 2.0 * kPi * T + 0.5;
        const double v = hopf_lax(H, [](double y) { return -std::cos(2.0 * kPi * y); },
                                  x, T, x - R, x + R);
        memo[x] = v;
        return v;
    };

    RateReport rep = l1_rate_experiment(
        H, [](double x, double y) { return -std::cos(2.0 * kPi * x) - std::cos(2.0 * kPi * y); },
        ladder, base, [&](double x, double y) { return v1d(x) + v1d(y); });

    ExperimentOutcome out;
    out.pass = rep.pass && rep.fitted_order <= 1.3;
    for (const auto& p : rep.pairs)
        out.lines.push_back("Delta=" + fmt(p.param) + " L1 error=" + fmt(p.error));
    out.lines.push_back("fitted order " + fmt(rep.fitted_order) + " (window [0.85,1.3])");
    out.report = to_json(rep);
    emit(cfg, "godunov-l1-rate", out.report,
         {{"godunov-l1-rate.csv", rate_csv(rep)},
          {"godunov-l1-rate.dat", plot_data(rep)}});
    return out;
}

ExperimentOutcome run_gradient_sharpness(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.pass = true;
    out.report = nlohmann::json::array();
    const int Nfine = cfg.cells > 0 ? cfg.cells : 2048;

    // equality case: step data, H = p^2/2, tau = 0.25 — the rarefaction fan
    // saturates the decay bound as h -> 0
    const HamiltonianSpec H2 = make_quadratic();
    for (int N : {Nfine / 2, Nfine}) {
        const Grid g = Grid::box1d(N, -2.0, 2.0);
        const double h = g.spacing(0);
        SolveConfig sc;
        sc.epsilon = 0.0;
        sc.T = 0.25;
        sc.out_times = {0.0, 0.25};
        const Trajectory traj = solve_viscous(
            H2, sample1d(g, [](double x) { return x > 0.0 ? 1.0 : 0.0; }), nullptr, sc);
        const auto reps = gradient_decay_check(traj, H2);
        const EstimateReport& r = reps.back();
        const double ratio = r.measured / r.theoretical_bound;
        const bool ok = ratio >= 0.85 && r.margin <= 10.0 * h;
        out.pass = out.pass && ok;
        out.lines.push_back("step N=" + std::to_string(N) + " measured=" + fmt(r.measured) +
                            " bound=" + fmt(r.theoretical_bound) + " ratio=" + fmt(ratio) +
                            " " + (ok ? "ok" : "FAILED"));
        out.report.push_back({{"case", "step"}, {"cells", N}, {"measured", r.measured},
                              {"bound", r.theoretical_bound}, {"ratio", ratio}, {"pass", ok}});
    }

    // never-exceed clause across catalog members on the -cos torus problem
    for (const char* cid : {"power1.5", "power2", "power3"}) {
        const std::string id(cid);
        const HamiltonianSpec H = hamiltonian_by_id(id);
        const Grid g = Grid::torus1d(512);
        SolveConfig sc;
        sc.epsilon = 0.0;
        sc.T = 0.3;
        sc.out_times = {0.15, 0.3};
        const Trajectory traj = solve_viscous(
            H, sample1d(g, [](double x) { return -std::cos(2.0 * kPi * x); }), nullptr, sc);
        const auto reps = gradient_decay_check(traj, H);
        bool ok = true;
        double worst = -1e300;
        for (const auto& r : reps) {
            ok = ok && r.pass;
            worst = std::max(worst, r.margin);
        }
        out.pass = out.pass && ok;
        out.lines.push_back(id + " torus: worst margin=" + fmt(worst) + " " +
                            (ok ? "ok" : "FAILED"));
        out.report.push_back({{"case", id}, {"worst_margin", worst}, {"pass", ok}});
    }
    emit(cfg, "gradient-sharpness", out.report, {});
    return out;
}

ExperimentOutcome run_oleinik(const ExperimentConfig& cfg) {
    const int Nfine = cfg.cells > 0 ? cfg.cells : 1024;
    const double T = 1.0 / kPi;  // post-shock for sine data
    ExperimentOutcome out;
    out.pass = true;
    out.report = nlohmann::json::array();
    for (int N : {Nfine / 2, Nfine}) {
        const Grid g = Grid::torus1d(N);
        const ScalarField U0 = sample1d(g, [](double x) { return std::sin(2.0 * kPi * x); });
        const Trajectory traj = conservation_law_1d(2.0, 0.0, U0, T, {T});
        const auto reps = oleinik_check(traj, 2.0);
        const EstimateReport& r = reps.back();
        double mass = 0.0;
        for (double x : traj.frames.back().v) mass += x;
        mass *= g.spacing(0);
        out.pass = out.pass && r.pass;
        out.lines.push_back("N=" + std::to_string(N) + " max U_x=" + fmt(r.measured) +
                            " bound=" + fmt(r.theoretical_bound) + " mass=" + fmt(mass) +
                            " " + (r.pass ? "ok" : "FAILED"));
        out.report.push_back({{"cells", N}, {"measured", r.measured},
                              {"bound", r.theoretical_bound}, {"margin", r.margin},
                              {"mass", mass}, {"pass", r.pass}});
    }
    emit(cfg, "oleinik", out.report, {});
    return out;
}

}  // namespace

const std::vector<Experiment>& experiment_registry() {
    static const std::vector<Experiment> registry = {
        {"stationary-eikonal-rate",
         "closed-form stationary boundary-layer example, sup error O(eps)",
         "Fitted O(eps) rate and 5h^2 closed-form match for -eps u'' + |u'| = 1",
         run_stationary_eikonal},
        {"stationary-linear-rate",
         "closed-form linear stationary example, sup error O(sqrt(eps))",
         "Fitted O(sqrt(eps)) rate for -eps u'' + u = 0 with layer boundary data",
         run_stationary_linear},
        {"viscosity-sup-rate",
         "two-side sup-norm vanishing-viscosity estimate with explicit constant",
         "Sup-norm error order and 2 sqrt(2 T ||Du0||) sqrt(eps) constant on the torus",
         run_viscosity_sup},
        {"viscosity-plus-rate",
         "one-side O(eps) estimate via the positive Laplacian part",
         "Plus-part sup error <= ||(D2 u0)^+|| T eps and fitted order >= 0.85",
         run_viscosity_plus},
        {"viscosity-l1-rate", "L1 vanishing-viscosity rate, order 1",
         "L^inf_t(L^1_x) error order >= 0.85 on the torus", run_viscosity_l1},
        {"viscosity-l2-rate", "interpolated L^p vanishing-viscosity rate, p = 2",
         "L2 error order >= 0.60 on the torus", run_viscosity_l2},
        {"viscosity-gradient-rate", "gradient vanishing-viscosity rate, order 1/2",
         "L1 and L2 gradient error orders >= 0.35 on the torus", run_viscosity_gradient},
        {"semiconcavity-exact", "sharp semiconcavity decay 1/t for the quadratic Hamiltonian",
         "|x| data: measured constant 2.0 at t = 0.5 and passing decay checks",
         run_semiconcavity_exact},
        {"semiconcavity-preservation",
         "semiconcavity preservation bound c0 + integral of c_f + C4t tau",
         "-cos data stays below 4 pi^2 for all frames at two refinements",
         run_semiconcavity_preservation},
        {"adjoint-duality", "adjoint density: mass, positivity, duality, cross-term bound",
         "Backward density conservation, nonnegativity, duality residual, cross slack",
         run_adjoint_duality},
        {"lr-stability", "L^r stability under the exponential [div b]^- factor",
         "Three drift cases: zero, sin, divergence-free 2D rotation", run_lr_stability},
        {"godunov-l1-rate", "Godunov-type scheme L1 rate, order 1",
         "2D -cos-cos problem: L1 error order in [0.85, 1.3]", run_godunov_l1},
        {"gradient-sharpness", "sharp sup-norm gradient decay constant",
         "Step-data equality case within 15% and never-exceed across the catalog",
         run_gradient_sharpness},
        {"oleinik", "one-sided Lipschitz (Oleinik) bound for conservation laws",
         "Burgers-type sine data post-shock satisfies U_x <= (1/C4)/t",
         run_oleinik},
    };
    return registry;
}

const Experiment* find_experiment(const std::string& id) {
    for (const auto& e : experiment_registry())
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace hjlab
