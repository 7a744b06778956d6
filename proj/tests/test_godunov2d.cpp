/// @file test_godunov2d.cpp
/// @brief Unit tests for the 2D projection operators and the Godunov-type
///        evolution: idempotency, exactness on low-order data, consistency
///        with the plain solver, and the rate harness on synthetic ladders.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hjlab/godunov2d.hpp"

using namespace hjlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

ScalarField fill2d(const Grid& g, const std::function<double(double, double)>& f) {
    ScalarField u(g);
    for (int i = 0; i < g.cells[0]; ++i)
        for (int j = 0; j < g.cells[1]; ++j) u(i, j) = f(g.center(0, i), g.center(1, j));
    return u;
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.v.size(); ++k) m = std::max(m, std::abs(a.v[k] - b.v[k]));
    return m;
}

}  // namespace

// ============================================================================
// Transfer operators
// ============================================================================

TEST_CASE("restrict_average: block means of an indicator") {
    const Grid fine = Grid::torus2d(8, 8);
    const Grid coarse = Grid::torus2d(4, 4);
    ScalarField u(fine, 0.0);
    u(0, 0) = 4.0;  // one fine cell in coarse block (0,0)
    const ScalarField r = restrict_average(u, coarse);
    CHECK(r(0, 0) == doctest::Approx(1.0));
    CHECK(r(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("bilinear_prolong: exact on affine periodic-free data") {
    // use cos/sin modes, for which prolongation is not exact, only to check
    // shape; exactness is checked on constants
    const Grid coarse = Grid::torus2d(8, 8);
    const Grid fine = Grid::torus2d(32, 32);
    const ScalarField c(coarse, 3.25);
    const ScalarField f = bilinear_prolong(c, fine);
    for (double v : f.v) CHECK(v == doctest::Approx(3.25).epsilon(1e-13));
}

TEST_CASE("project: exactly idempotent") {
    const Grid fine = Grid::torus2d(64, 64);
    const Grid coarse = Grid::torus2d(16, 16);
    const ScalarField u = fill2d(fine, [](double x, double y) {
        return std::sin(2.0 * kPi * x) * std::cos(4.0 * kPi * y) + 0.3 * std::cos(2.0 * kPi * y);
    });
    const ScalarField p1 = project(u, coarse);
    const ScalarField p2 = project(p1, coarse);
    CHECK(max_abs_diff(p1, p2) <= 1e-12);
}

TEST_CASE("project: preserves coarse cell averages") {
    const Grid fine = Grid::torus2d(32, 32);
    const Grid coarse = Grid::torus2d(8, 8);
    const ScalarField u = fill2d(fine, [](double x, double y) {
        return std::cos(2.0 * kPi * x) + std::sin(2.0 * kPi * y);
    });
    const ScalarField p = project(u, coarse);
    const ScalarField ru = restrict_average(u, coarse);
    const ScalarField rp = restrict_average(p, coarse);
    CHECK(max_abs_diff(ru, rp) <= 1e-12);
}

TEST_CASE("project: smooth field error is O(Delta^2)") {
    const auto f = [](double x, double y) { return std::sin(2.0 * kPi * x) * std::sin(2.0 * kPi * y); };
    double err_prev = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        const int nc = pass == 0 ? 8 : 16;
        const Grid fine = Grid::torus2d(4 * nc, 4 * nc);
        const Grid coarse = Grid::torus2d(nc, nc);
        const ScalarField u = fill2d(fine, f);
        const double err = max_abs_diff(project(u, coarse), u);
        if (pass == 1) {
            // halving Delta must cut the defect by roughly 4
            CHECK(err <= 0.35 * err_prev);
        }
        err_prev = err;
    }
}

TEST_CASE("project: rejects non-integer refinement ratios") {
    const Grid fine = Grid::torus2d(24, 24);
    const Grid coarse = Grid::torus2d(16, 16);
    const ScalarField u(fine, 0.0);
    CHECK_THROWS(project(u, coarse));
}

// ============================================================================
// Evolution
// ============================================================================

TEST_CASE("godunov_evolve: constants are fixed points with zero truncation error") {
    const Grid g = Grid::torus2d(16, 16);
    ScalarField u0(g, 1.5);
    GodunovConfig cfg;
    cfg.T = 0.2;
    const GodunovResult res = godunov_evolve(make_quadratic(), u0, cfg);
    for (double v : res.traj.frames.back().v) CHECK(v == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(res.truncation_error <= 1e-12);
}

TEST_CASE("godunov_evolve: fine_factor 1 reproduces the plain inviscid solver") {
    const int n = 32;
    const Grid g = Grid::torus2d(n, n);
    const ScalarField u0 = fill2d(g, [](double x, double y) {
        return -std::cos(2.0 * kPi * x) - std::cos(2.0 * kPi * y);
    });
    GodunovConfig cfg;
    cfg.T = 0.1;
    cfg.fine_factor = 1;
    const GodunovResult res = godunov_evolve(make_quadratic(), u0, cfg);
    // no projection: the defect (I - P) u is identically zero
    CHECK(res.truncation_error <= 1e-12);

    SolveConfig scfg;
    scfg.T = 0.1;
    scfg.epsilon = 0.0;
    scfg.reduce_alpha = false;
    const Trajectory plain = solve_viscous(make_quadratic(), u0, nullptr, scfg);
    // window boundaries re-anchor the adaptive step ladder, so the two runs
    // agree to scheme accuracy rather than bitwise
    CHECK(max_abs_diff(res.traj.frames.back(), plain.frames.back()) <= 2.0 * g.spacing(0));
}

TEST_CASE("godunov_evolve: rejects CFL-violating windows") {
    const Grid g = Grid::torus2d(64, 64);
    const ScalarField u0 = fill2d(g, [](double x, double y) {
        return -std::cos(2.0 * kPi * x) - std::cos(2.0 * kPi * y);
    });
    GodunovConfig cfg;
    cfg.T = 0.3;
    cfg.dt = 0.2;  // L_H dt / Delta >> 1/4
    CHECK_THROWS(godunov_evolve(make_quadratic(), u0, cfg));
}

// ============================================================================
// Discrete semiconcavity and the rate harness
// ============================================================================

TEST_CASE("discrete_semiconcavity: constants, kinks, and smooth data") {
    const Grid g = Grid::torus2d(64, 64);
    const double h0 = 4.0 * g.spacing(0);
    CHECK(discrete_semiconcavity(ScalarField(g, 3.0), h0) <= 1e-12);
    // a convex kink carries gradient jump 2: the positive part of the axis
    // second difference integrates to the jump, independent of the arm
    const ScalarField kinked = fill2d(g, [](double x, double) {
        return std::abs(x - 0.5);
    });
    CHECK(discrete_semiconcavity(kinked, h0) == doctest::Approx(2.0).epsilon(0.1));
    // -cos - cos: positive part of 4 pi^2 cos(2 pi x) integrates to 4 pi
    const ScalarField smooth = fill2d(g, [](double x, double y) {
        return -std::cos(2.0 * kPi * x) - std::cos(2.0 * kPi * y);
    });
    CHECK(discrete_semiconcavity(smooth, g.spacing(0)) ==
          doctest::Approx(4.0 * kPi).epsilon(0.05));
}

TEST_CASE("l1_rate_experiment: synthetic first-order ladder logic via make_rate_report") {
    // the full 2D experiment is exercised by the acceptance harness; here the
    // pass rule is pinned on a synthetic (Delta, 3 Delta) ladder
    std::vector<std::pair<double, double>> pairs;
    for (int n : {16, 24, 32, 48, 64}) {
        const double d = 1.0 / n;
        pairs.push_back({d, 3.0 * d});
    }
    const RateReport rep = make_rate_report("godunov-l1", "first-order", pairs, 1.0, 0.15, true);
    CHECK(rep.pass);
    CHECK(rep.fitted_order == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("l1_rate_experiment: kinked data is labeled outside theorem hypotheses") {
    const auto u0 = [](double x, double y) {
        return std::abs(x - 0.5) + std::abs(y - 0.5);  // convex kink: not semiconcave
    };
    const auto uref = [](double, double) { return 0.0; };
    GodunovConfig cfg;
    cfg.T = 0.05;
    cfg.fine_factor = 2;
    const RateReport rep =
        l1_rate_experiment(make_quadratic(), u0, {16, 24, 32}, cfg, uref);
    CHECK(rep.theorem.find("outside theorem hypotheses") != std::string::npos);
}
