/// @file test_rates.cpp
/// @brief Unit tests for order fitting, error splitting, the sweep driver,
///        and the rate-report pass rules.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hjlab/rates.hpp"

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
// Order fitting
// ============================================================================

TEST_CASE("fit_order: exact power laws are recovered to 1e-12") {
    for (double order : {1.0, 0.75, 0.5}) {
        std::vector<std::pair<double, double>> pairs;
        for (int k = 0; k < 6; ++k) {
            const double eps = 0.1 * std::pow(0.5, k);
            pairs.push_back({eps, 3.0 * std::pow(eps, order)});
        }
        CHECK(fit_order(pairs) == doctest::Approx(order).epsilon(1e-12));
    }
}

TEST_CASE("fit_order: multiplicative noise moves the slope by less than 0.03") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-0.02, 0.02);
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 6; ++k) {
        const double eps = 0.1 * std::pow(0.5, k);
        pairs.push_back({eps, std::pow(eps, 1.0) * (1.0 + dist(rng))});
    }
    CHECK(std::abs(fit_order(pairs) - 1.0) <= 0.03);
}

TEST_CASE("fit_order: fewer than 3 positive pairs throws") {
    CHECK_THROWS(fit_order({{0.1, 1.0}, {0.05, 0.5}}));
    CHECK_THROWS(fit_order({{0.1, 1.0}, {0.05, 0.0}, {0.025, 0.25}}));
}

// ============================================================================
// Error splitting
// ============================================================================

TEST_CASE("split_error: plus/minus parts and total") {
    const Grid g = Grid::torus1d(64);
    const ScalarField a = fill1d(g, [](double x) { return std::sin(2.0 * kPi * x); });
    const ScalarField zero(g, 0.0);
    for (double p : {1.0, 2.0, kInf}) {
        const SplitError e = split_error(a, zero, p);
        // the sine's positive and negative parts are mirror images
        CHECK(e.plus == doctest::Approx(e.minus).epsilon(1e-12));
        if (p == kInf) {
            CHECK(e.total == doctest::Approx(std::max(e.plus, e.minus)).epsilon(1e-12));
        } else {
            // |v|^p = (v+)^p + (v-)^p pointwise
            CHECK(std::pow(e.total, p) ==
                  doctest::Approx(std::pow(e.plus, p) + std::pow(e.minus, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("split_error: one-sided perturbation loads only the plus part") {
    const Grid g = Grid::torus1d(32);
    ScalarField a(g, 0.0), b(g, 0.0);
    a(5) = 2.0;
    const SplitError e = split_error(a, b, 1.0);
    CHECK(e.minus == doctest::Approx(0.0));
    CHECK(e.plus == doctest::Approx(2.0 / 32.0).epsilon(1e-12));
}

TEST_CASE("sup_time_errors and gradient_error: agree with per-frame maxima") {
    const Grid g = Grid::torus1d(64);
    Trajectory a, b;
    a.grid = b.grid = g;
    for (int k = 0; k < 3; ++k) {
        const double amp = 0.1 * (k + 1);
        a.times.push_back(0.1 * k);
        b.times.push_back(0.1 * k);
        a.frames.push_back(fill1d(g, [&](double x) { return amp * std::sin(2.0 * kPi * x); }));
        b.frames.push_back(ScalarField(g, 0.0));
    }
    const SplitError e = sup_time_errors(a, b, kInf);
    CHECK(e.total == doctest::Approx(lp_norm(a.frames.back(), kInf)).epsilon(1e-12));
    const double ge = gradient_error(a, b, kInf);
    const auto grad = discrete_gradient(a.frames.back());
    CHECK(ge == doctest::Approx(lp_norm(grad[0], kInf)).epsilon(1e-12));
}

// ============================================================================
// Sweep driver
// ============================================================================

TEST_CASE("vanishing_viscosity_sweep: closed-form reference, O(sqrt(eps)) sup rate") {
    // u0 = -cos(2 pi x), H = |p|^2/2: compare against the Hopf-Lax reference
    const int n = 128;
    const Grid g = Grid::torus1d(n);
    SweepProblem prob;
    const HamiltonianSpec H = make_quadratic();
    prob.H = &H;
    prob.u0 = fill1d(g, [](double x) { return -std::cos(2.0 * kPi * x); });
    prob.T = 0.3;
    prob.out_times = {0.15, 0.3};
    prob.reference = [&](double x, double t) {
        return hopf_lax(H, [](double y) { return -std::cos(2.0 * kPi * y); }, x, t,
                        x - 2.0 * kPi * t - 0.5, x + 2.0 * kPi * t + 0.5);
    };
    const std::vector<double> ladder = {0.1, 0.05, 0.025, 0.0125, 0.00625};
    const SweepResult res = vanishing_viscosity_sweep(prob, ladder);
    REQUIRE(res.runs.size() == ladder.size());
    CHECK(res.reference_guard == doctest::Approx(0.0));
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t k = 0; k < ladder.size(); ++k)
        pairs.push_back({ladder[k], sup_time_errors(res.runs[k], res.reference, kInf).total});
    const double order = fit_order(pairs);
    INFO("fitted sup-norm order " << order);
    CHECK(order >= 0.35);
    CHECK(order <= 1.3);
}

TEST_CASE("vanishing_viscosity_sweep: fine reference reports a positive guard") {
    const int n = 64;
    const Grid g = Grid::torus1d(n);
    SweepProblem prob;
    const HamiltonianSpec H = make_quadratic();
    prob.H = &H;
    prob.u0 = fill1d(g, [](double x) { return -std::cos(2.0 * kPi * x); });
    prob.T = 0.2;
    prob.out_times = {0.2};
    prob.reference_refine = 4;
    const SweepResult res = vanishing_viscosity_sweep(prob, {0.1, 0.05, 0.025});
    CHECK(res.reference_guard > 0.0);
    CHECK(res.reference.frames.size() == 1);
    CHECK(res.reference.grid.cells[0] == n);
}

// ============================================================================
// Rate reports
// ============================================================================

TEST_CASE("make_rate_report: two-side rule") {
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 5; ++k) {
        const double eps = 0.1 * std::pow(0.5, k);
        pairs.push_back({eps, std::pow(eps, 1.02)});
    }
    const RateReport ok = make_rate_report("t", "th", pairs, 1.0, 0.1, false);
    CHECK(ok.pass);
    const RateReport bad = make_rate_report("t", "th", pairs, 0.5, 0.1, false);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("make_rate_report: one-side rule passes faster-than-expected rates") {
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 5; ++k) {
        const double eps = 0.1 * std::pow(0.5, k);
        pairs.push_back({eps, std::pow(eps, 1.4)});
    }
    CHECK(make_rate_report("t", "th", pairs, 1.0, 0.15, true).pass);
    CHECK_FALSE(make_rate_report("t", "th", pairs, 1.0, 0.15, false).pass);
}

TEST_CASE("make_rate_report: reference guard excludes contaminated pairs") {
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 6; ++k) {
        const double eps = 0.1 * std::pow(0.5, k);
        pairs.push_back({eps, std::pow(eps, 1.0)});
    }
    // guard 1e-3: errors below 1e-2 (the last two rungs) are excluded
    const RateReport rep = make_rate_report("t", "th", pairs, 1.0, 0.1, false, 1e-3);
    int included = 0;
    for (const auto& p : rep.pairs) included += p.included ? 1 : 0;
    CHECK(included == 4);
    CHECK(rep.pass);
    // guard so large that under 3 pairs survive: report fails with NaN order
    const RateReport starved = make_rate_report("t", "th", pairs, 1.0, 0.1, false, 1e-1);
    CHECK_FALSE(starved.pass);
}
