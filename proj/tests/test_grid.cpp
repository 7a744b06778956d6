/// @file test_grid.cpp
/// @brief Unit tests for grids, fields, discrete operators, and norms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hjlab/grid.hpp"
#include "hjlab/tridiag.hpp"

using namespace hjlab;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

ScalarField fill1d(const Grid& g, const std::function<double(double)>& f) {
    ScalarField u(g);
    for (int i = 0; i < g.cells[0]; ++i) u(i) = f(g.center(0, i));
    return u;
}

}  // namespace

// ============================================================================
// Grid geometry
// ============================================================================

TEST_CASE("grid: cell centers and spacing") {
    const Grid g = Grid::torus1d(8, 2.0);
    CHECK(g.spacing(0) == doctest::Approx(0.25));
    CHECK(g.center(0, 0) == doctest::Approx(0.125));
    CHECK(g.center(0, 7) == doctest::Approx(1.875));
    CHECK(g.size() == 8);
    CHECK(g.cell_volume() == doctest::Approx(0.25));
}

TEST_CASE("grid: 2D indexing is row-major in the first axis") {
    const Grid g = Grid::torus2d(4, 8);
    CHECK(g.idx(0, 0) == 0);
    CHECK(g.idx(1, 0) == 8);
    CHECK(g.idx(2, 3) == 19);
    CHECK(g.size() == 32);
}

TEST_CASE("grid: validation rejects tiny axes") {
    Grid g = Grid::torus1d(4);
    g.cells[0] = 3;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

// ============================================================================
// Ghost values
// ============================================================================

TEST_CASE("ghosted: periodic wrap") {
    const Grid g = Grid::torus1d(4);
    ScalarField u(g);
    for (int i = 0; i < 4; ++i) u(i) = i;
    CHECK(ghosted(u, -1) == doctest::Approx(3.0));
    CHECK(ghosted(u, 4) == doctest::Approx(0.0));
    CHECK(ghosted(u, 9) == doctest::Approx(1.0));
}

TEST_CASE("ghosted: bounded linear extrapolation continues the slope") {
    const Grid g = Grid::box1d(4, 0.0, 1.0);
    ScalarField u = fill1d(g, [](double x) { return 3.0 * x + 1.0; });
    CHECK(ghosted(u, -1) == doctest::Approx(3.0 * (-0.125) + 1.0));
    CHECK(ghosted(u, 4) == doctest::Approx(3.0 * 1.125 + 1.0));
}

TEST_CASE("ghosted: Dirichlet ghost hits the trace at the face midpoint") {
    const Grid g = Grid::box1d(4, 0.0, 1.0, BoundaryRule::dirichlet, 2.0, -1.0);
    ScalarField u(g, 0.5);
    // midpoint of ghost and first cell equals the trace
    CHECK(0.5 * (ghosted(u, -1) + u(0)) == doctest::Approx(2.0));
    CHECK(0.5 * (ghosted(u, 4) + u(3)) == doctest::Approx(-1.0));
}

// ============================================================================
// Discrete gradient
// ============================================================================

TEST_CASE("gradient: u = x gives 1 in the interior of a box") {
    const Grid g = Grid::box1d(32, 0.0, 1.0);
    const ScalarField u = fill1d(g, [](double x) { return x; });
    const auto grad = discrete_gradient(u);
    REQUIRE(grad.size() == 1);
    for (int i = 0; i < 32; ++i) CHECK(grad[0](i) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gradient: constant field gives 0") {
    const Grid g = Grid::torus1d(16);
    const ScalarField u(g, 7.25);
    const auto grad = discrete_gradient(u);
    for (int i = 0; i < 16; ++i) CHECK(grad[0](i) == doctest::Approx(0.0));
}

TEST_CASE("gradient: sin(2 pi x) on 128 cells, second-order accurate at the crest") {
    const int n = 128;
    const Grid g = Grid::torus1d(n);
    const ScalarField u = fill1d(g, [](double x) { return std::sin(2.0 * kPi * x); });
    const auto grad = discrete_gradient(u);
    const double h = g.spacing(0);
    // central difference of sin has relative error (2 pi h)^2 / 6
    const double tol = 2.0 * kPi * (2.0 * kPi * h) * (2.0 * kPi * h) / 6.0;
    // derivative at the cell center nearest x = 0 (cell centers are offset h/2)
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double exact = 2.0 * kPi * std::cos(2.0 * kPi * g.center(0, i));
        worst = std::max(worst, std::abs(grad[0](i) - exact));
    }
    CHECK(worst <= tol * 1.0001);
}

TEST_CASE("gradient: 2D separable field has per-axis components") {
    const Grid g = Grid::torus2d(32, 32);
    ScalarField u(g);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            u(i, j) = std::sin(2.0 * kPi * g.center(0, i)) + std::cos(2.0 * kPi * g.center(1, j));
    const auto grad = discrete_gradient(u);
    REQUIRE(grad.size() == 2);
    const double h = g.spacing(0);
    const double tol = 2.0 * kPi * (2.0 * kPi * h) * (2.0 * kPi * h) / 6.0 + 1e-12;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            CHECK(std::abs(grad[0](i, j) - 2.0 * kPi * std::cos(2.0 * kPi * g.center(0, i))) <= tol);
            CHECK(std::abs(grad[1](i, j) + 2.0 * kPi * std::sin(2.0 * kPi * g.center(1, j))) <= tol);
        }
}

// ============================================================================
// Laplacian and second differences
// ============================================================================

TEST_CASE("laplacian: u = x^2 gives exactly 2") {
    const Grid g = Grid::box1d(16, -1.0, 1.0);
    const ScalarField u = fill1d(g, [](double x) { return x * x; });
    const ScalarField lap = discrete_laplacian(u);
    // linear extrapolation ghost is exact only to first order at the boundary,
    // so check the interior
    for (int i = 1; i < 15; ++i) CHECK(lap(i) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("second_difference: |x| with h = 0.25 arms gives 8 at the kink") {
    // spacing 0.25 with the kink placed on a cell center (x = 0.125)
    const Grid g = Grid::box1d(24, -3.0, 3.0);
    const ScalarField u = fill1d(g, [](double x) { return std::abs(x - 0.125); });
    const ScalarField d2 = second_difference(u, 0, 1);  // one cell = 0.25
    double peak = -kInf;
    for (int i = 1; i < 23; ++i) peak = std::max(peak, d2(i));
    CHECK(peak == doctest::Approx(8.0).epsilon(1e-9));

    const ScalarField v = fill1d(g, [](double x) { return -std::abs(x - 0.125); });
    const ScalarField e2 = second_difference(v, 0, 1);
    double trough = kInf;
    for (int i = 1; i < 23; ++i) trough = std::min(trough, e2(i));
    CHECK(trough == doctest::Approx(-8.0).epsilon(1e-9));
}

TEST_CASE("second_difference: concave field stays nonpositive") {
    const Grid g = Grid::box1d(64, 0.0, 1.0);
    const ScalarField w = fill1d(g, [](double x) { return -x * x + x; });
    const ScalarField d2 = second_difference(w, 0, 2);
    // the linear-extrapolation ghost only reaches one cell, so two-step arms
    // are meaningful in the interior
    for (int i = 2; i < 62; ++i) CHECK(d2(i) <= 1e-12);
}

TEST_CASE("second_difference: diagonal directions on a square 2D mesh") {
    const Grid g = Grid::torus2d(32, 32);
    ScalarField u(g);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            const double x = g.center(0, i), y = g.center(1, j);
            u(i, j) = x * x + y * y - x - y;  // Hessian = 2 I on the cell values
        }
    const ScalarField d2 = second_difference(u, 2, 1);
    // along the diagonal xi = (1,1)/sqrt(2): D^2 u xi.xi = 2 exactly for a
    // quadratic, away from the periodic seam
    CHECK(d2(8, 8) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS(second_difference(fill1d(Grid::torus1d(8), [](double) { return 0.0; }), 2, 1));
}

TEST_CASE("laplacian equals the sum of axis second differences at one step") {
    const Grid g = Grid::torus2d(16, 16);
    ScalarField u(g);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& x : u.v) x = dist(rng);
    const ScalarField lap = discrete_laplacian(u);
    const ScalarField dx = second_difference(u, 0, 1);
    const ScalarField dy = second_difference(u, 1, 1);
    for (std::size_t k = 0; k < u.v.size(); ++k)
        CHECK(lap.v[k] == doctest::Approx(dx.v[k] + dy.v[k]).epsilon(1e-12));
}

// ============================================================================
// Norms and oscillation
// ============================================================================

TEST_CASE("lp_norm: constant 1 has norm 1 for p = 1 and p = infinity") {
    const Grid g = Grid::torus1d(32);
    const ScalarField u(g, 1.0);
    CHECK(lp_norm(u, 1.0) == doctest::Approx(1.0));
    CHECK(lp_norm(u, kInf) == doctest::Approx(1.0));
    CHECK(lp_norm(u, 2.0) == doctest::Approx(1.0));
}

TEST_CASE("lp_norm: sin(2 pi x) has L2 norm 1/sqrt(2) to O(h^2)") {
    const Grid g = Grid::torus1d(256);
    const ScalarField u = fill1d(g, [](double x) { return std::sin(2.0 * kPi * x); });
    CHECK(lp_norm(u, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("lp_norm: homogeneity") {
    const Grid g = Grid::torus1d(16);
    ScalarField u = fill1d(g, [](double x) { return std::cos(2.0 * kPi * x) + 0.3; });
    ScalarField w = u;
    for (double& x : w.v) x *= -3.5;
    for (double p : {1.0, 2.0, 3.0, kInf})
        CHECK(lp_norm(w, p) == doctest::Approx(3.5 * lp_norm(u, p)).epsilon(1e-12));
}

TEST_CASE("oscillation: sin is 2 within 1e-3 on a fine torus; constants are 0") {
    const Grid g = Grid::torus1d(1024);
    const ScalarField u = fill1d(g, [](double x) { return std::sin(2.0 * kPi * x); });
    CHECK(std::abs(oscillation(u) - 2.0) <= 1e-3);
    CHECK(oscillation(ScalarField(g, 4.0)) == doctest::Approx(0.0));
}

// ============================================================================
// Tridiagonal solvers
// ============================================================================

TEST_CASE("thomas: solves a random diagonally dominant system") {
    const int n = 50;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> lo(n, 0.0), di(n, 0.0), up(n, 0.0), x(n), d(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (i > 0) lo[i] = dist(rng);
        if (i < n - 1) up[i] = dist(rng);
        di[i] = 3.0 + dist(rng);
        x[i] = dist(rng);
    }
    for (int i = 0; i < n; ++i) {
        d[i] = di[i] * x[i];
        if (i > 0) d[i] += lo[i] * x[i - 1];
        if (i < n - 1) d[i] += up[i] * x[i + 1];
    }
    thomas(lo, di, up, d);
    for (int i = 0; i < n; ++i) CHECK(d[i] == doctest::Approx(x[i]).epsilon(1e-10));
}

TEST_CASE("thomas_periodic_const: cyclic constant-coefficient system") {
    const int n = 64;
    const double a = -0.4, b = 1.8, c = -0.4;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(n), d(n);
    for (double& v : x) v = dist(rng);
    for (int i = 0; i < n; ++i)
        d[i] = a * x[(i + n - 1) % n] + b * x[i] + c * x[(i + 1) % n];
    thomas_periodic_const(a, b, c, d);
    for (int i = 0; i < n; ++i) CHECK(d[i] == doctest::Approx(x[i]).epsilon(1e-10));
}
