/// @file test_stationary.cpp
/// @brief Unit tests for the fitted stationary solver against the two
///        closed-form boundary-layer solutions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hjlab/stationary.hpp"

using namespace hjlab;

namespace {

ScalarField fill1d(const Grid& g, const std::function<double(double)>& f) {
    ScalarField u(g);
    for (int i = 0; i < g.cells[0]; ++i) u(i) = f(g.center(0, i));
    return u;
}

// closed form of  -eps u'' + |u'| = 1 on (-1, 1), u(+-1) = 0:
// u = 1 - |x| - eps (e^{-|x|/eps} - e^{-1/eps})
double eikonal_closed(double x, double eps) {
    return 1.0 - std::abs(x) - eps * (std::exp(-std::abs(x) / eps) - std::exp(-1.0 / eps));
}

// closed form of  -eps u'' + u = 0 on (0, 1) with unit-boundary-layer data:
// u = sqrt(eps) cosh((x - 1/2)/sqrt(eps)) / sinh(1/(2 sqrt(eps)))
double linear_closed(double x, double eps) {
    const double s = std::sqrt(eps);
    return s * std::cosh((x - 0.5) / s) / std::sinh(0.5 / s);
}

}  // namespace

TEST_CASE("stationary eikonal: matches the closed form to 5 h^2 at eps = 0.1") {
    const int n = 401;  // odd so a cell center sits on the kink at x = 0
    const double eps = 0.1;
    const Grid g = Grid::box1d(n, -1.0, 1.0, BoundaryRule::dirichlet,
                               eikonal_closed(-1.0, eps), eikonal_closed(1.0, eps));
    const ScalarField f = fill1d(g, [](double) { return 1.0; });
    StationaryConfig cfg;
    cfg.epsilon = eps;
    const ScalarField u = solve_stationary_1d(make_eikonal(), f, cfg);
    const double h = g.spacing(0);
    double err = 0.0;
    for (int i = 0; i < n; ++i) err = std::max(err, std::abs(u(i) - eikonal_closed(g.center(0, i), eps)));
    CHECK(err <= 5.0 * h * h);
    // anchor: u(0) = 1 - 0.1 (e^0 - e^{-10}) = 0.9000045...
    const int mid = n / 2;
    CHECK(g.center(0, mid) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(u(mid) == doctest::Approx(0.9000045399930).epsilon(5.0 * h * h));
}

TEST_CASE("stationary eikonal: viscous error against 1 - |x| is eps (1 - e^{-1/eps})") {
    const int n = 401;
    const double eps = 0.05;
    const Grid g = Grid::box1d(n, -1.0, 1.0, BoundaryRule::dirichlet,
                               eikonal_closed(-1.0, eps), eikonal_closed(1.0, eps));
    const ScalarField f = fill1d(g, [](double) { return 1.0; });
    StationaryConfig cfg;
    cfg.epsilon = eps;
    const ScalarField u = solve_stationary_1d(make_eikonal(), f, cfg);
    double err = 0.0;
    for (int i = 0; i < n; ++i)
        err = std::max(err, std::abs(u(i) - (1.0 - std::abs(g.center(0, i)))));
    const double exact_gap = eps * (1.0 - std::exp(-1.0 / eps));
    CHECK(err == doctest::Approx(exact_gap).epsilon(0.02));
}

TEST_CASE("stationary linear: matches the closed form, anchor at the midpoint") {
    const int n = 401;
    const double eps = 0.01;
    const Grid g = Grid::box1d(n, 0.0, 1.0, BoundaryRule::dirichlet,
                               linear_closed(0.0, eps), linear_closed(1.0, eps));
    const ScalarField f(g, 0.0);
    StationaryConfig cfg;
    cfg.epsilon = eps;
    cfg.lambda = 1.0;
    const ScalarField u = solve_stationary_1d(make_zero(), f, cfg);
    const double h = g.spacing(0);
    double err = 0.0;
    for (int i = 0; i < n; ++i)
        err = std::max(err, std::abs(u(i) - linear_closed(g.center(0, i), eps)));
    CHECK(err <= 5.0 * h * h);
    // anchor: u(1/2) = sqrt(eps)/sinh(1/(2 sqrt(eps))) = 1.3477e-3 at eps = 0.01
    const int mid = n / 2;
    CHECK(u(mid) == doctest::Approx(1.3477e-3).epsilon(1e-3));
}

TEST_CASE("stationary: zero data with lambda = 1 gives the zero solution") {
    const Grid g = Grid::box1d(65, 0.0, 1.0, BoundaryRule::dirichlet, 0.0, 0.0);
    const ScalarField f(g, 0.0);
    StationaryConfig cfg;
    cfg.epsilon = 0.05;
    cfg.lambda = 1.0;
    const ScalarField u = solve_stationary_1d(make_quadratic(), f, cfg);
    for (double v : u.v) CHECK(std::abs(v) <= 1e-10);
}

TEST_CASE("stationary: warm start reproduces the cold-start solution") {
    const int n = 201;
    const double eps = 0.1;
    const Grid g = Grid::box1d(n, -1.0, 1.0, BoundaryRule::dirichlet,
                               eikonal_closed(-1.0, eps), eikonal_closed(1.0, eps));
    const ScalarField f = fill1d(g, [](double) { return 1.0; });
    StationaryConfig cfg;
    cfg.epsilon = eps;
    const ScalarField cold = solve_stationary_1d(make_eikonal(), f, cfg);
    const ScalarField guess = fill1d(g, [](double x) { return 1.0 - std::abs(x); });
    cfg.initial_guess = &guess;
    const ScalarField warm = solve_stationary_1d(make_eikonal(), f, cfg);
    for (int i = 0; i < n; ++i) CHECK(warm(i) == doctest::Approx(cold(i)).epsilon(1e-8));
}

TEST_CASE("stationary: stagnation throws") {
    const Grid g = Grid::box1d(65, 0.0, 1.0, BoundaryRule::dirichlet, 0.0, 0.0);
    const ScalarField f(g, 5.0);
    StationaryConfig cfg;
    cfg.epsilon = 0.05;
    cfg.lambda = 0.0;
    cfg.max_iterations = 1;  // one damped step cannot solve the nonlinear BVP
    CHECK_THROWS(solve_stationary_1d(make_quadratic(), f, cfg));
}
