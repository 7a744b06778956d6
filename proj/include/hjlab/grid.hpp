/// @file grid.hpp
/// @brief Uniform 1D/2D grids (periodic or truncated box), scalar fields,
///        discrete differential operators and discrete L^p norms.
///
/// Cell-centered layout: cell i on axis 0 has center x0 + (i+0.5)*dx.
/// Bounded grids carry a boundary rule used by every stencil that needs a
/// ghost value: linear extrapolation (default for truncated free-space
/// problems) or Dirichlet with a prescribed trace (ghost chosen so the
/// midpoint of cell 0 and the ghost hits the trace).

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hjlab {

enum class Topology { periodic, bounded };
enum class BoundaryRule { linear_extrapolation, dirichlet };

struct Grid {
    int dim = 1;
    std::array<int, 2> cells{4, 1};
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{1.0, 1.0};
    Topology topology = Topology::periodic;
    BoundaryRule brule = BoundaryRule::linear_extrapolation;
    // Dirichlet traces, 1D only: {left, right}
    std::array<double, 2> dirichlet{0.0, 0.0};

    double spacing(int axis) const { return (hi[axis] - lo[axis]) / cells[axis]; }
    double center(int axis, int i) const { return lo[axis] + (i + 0.5) * spacing(axis); }
    std::size_t size() const {
        return static_cast<std::size_t>(cells[0]) * (dim == 2 ? cells[1] : 1);
    }
    double cell_volume() const {
        return spacing(0) * (dim == 2 ? spacing(1) : 1.0);
    }
    std::size_t idx(int i, int j = 0) const {
        return static_cast<std::size_t>(i) * (dim == 2 ? cells[1] : 1) + j;
    }
    void validate() const {
        if (dim < 1 || dim > 2) throw std::invalid_argument("grid: dim must be 1 or 2");
        for (int a = 0; a < dim; ++a)
            if (cells[a] < 4) throw std::invalid_argument("grid: need >= 4 cells per axis");
    }

    static Grid torus1d(int n, double period = 1.0) {
        Grid g;
        g.dim = 1; g.cells = {n, 1}; g.lo = {0.0, 0.0}; g.hi = {period, 1.0};
        g.topology = Topology::periodic;
        g.validate();
        return g;
    }
    static Grid box1d(int n, double a, double b,
                      BoundaryRule rule = BoundaryRule::linear_extrapolation,
                      double gl = 0.0, double gr = 0.0) {
        Grid g;
        g.dim = 1; g.cells = {n, 1}; g.lo = {a, 0.0}; g.hi = {b, 1.0};
        g.topology = Topology::bounded;
        g.brule = rule; g.dirichlet = {gl, gr};
        g.validate();
        return g;
    }
    static Grid torus2d(int nx, int ny, double px = 1.0, double py = 1.0) {
        Grid g;
        g.dim = 2; g.cells = {nx, ny}; g.lo = {0.0, 0.0}; g.hi = {px, py};
        g.topology = Topology::periodic;
        g.validate();
        return g;
    }
};

struct ScalarField {
    Grid grid;
    std::vector<double> v;
    double time_tag = 0.0;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), v(g.size(), fill) {}

    double& operator()(int i, int j = 0) { return v[grid.idx(i, j)]; }
    double operator()(int i, int j = 0) const { return v[grid.idx(i, j)]; }

    bool finite() const {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

struct Trajectory {
    Grid grid;
    std::vector<double> times;
    std::vector<ScalarField> frames;

    const ScalarField& at_time(double t, double tol = 1e-12) const {
        for (std::size_t k = 0; k < times.size(); ++k)
            if (std::abs(times[k] - t) <= tol) return frames[k];
        throw std::invalid_argument("trajectory: time " + std::to_string(t) + " is not a frame time");
    }
};

// ============================================================================
// Ghost-value lookup: value of the field at logical index i (may be -1 or n)
// ============================================================================
inline double ghosted(const ScalarField& u, int i, int j = 0) {
    const Grid& g = u.grid;
    const int n = g.cells[0];
    auto side = [&](int ii, int jj) { return u(ii, jj); };
    if (g.topology == Topology::periodic) {
        int ii = (i % n + n) % n;
        int jj = 0;
        if (g.dim == 2) {
            const int m = g.cells[1];
            jj = (j % m + m) % m;
        }
        return side(ii, jj);
    }
    // bounded: 1D only (2D problems in this artifact live on tori)
    if (i < 0) {
        if (g.brule == BoundaryRule::dirichlet) return 2.0 * g.dirichlet[0] - u(0);
        return 2.0 * u(0) - u(1);
    }
    if (i >= n) {
        if (g.brule == BoundaryRule::dirichlet) return 2.0 * g.dirichlet[1] - u(n - 1);
        return 2.0 * u(n - 1) - u(n - 2);
    }
    return side(i, j);
}

// 2D periodic lookup with both indices wrapped
inline double ghosted2(const ScalarField& u, int i, int j) {
    const int n = u.grid.cells[0], m = u.grid.cells[1];
    return u((i % n + n) % n, (j % m + m) % m);
}

// ============================================================================
// Discrete operators
// ============================================================================

/// Central-difference gradient; one component field per axis.
std::vector<ScalarField> discrete_gradient(const ScalarField& u);

/// Sum over axes of the 3-point second difference.
ScalarField discrete_laplacian(const ScalarField& u);

/// D^2_{h,xi} u = (u(x+h xi) + u(x-h xi) - 2u(x))/h^2 for an axis or diagonal
/// direction. `axis` in {0,1} selects coordinate directions; {2,3} the two
/// diagonals (2D only), with effective spacing h*sqrt(2) per diagonal step.
/// `steps` is the integer number of grid cells per probe arm.
ScalarField second_difference(const ScalarField& u, int axis, int steps);

/// Discrete L^p norm with midpoint (cell-average) quadrature; p = infinity
/// accepted as std::numeric_limits<double>::infinity().
double lp_norm(const ScalarField& u, double p);

/// max - min of the values.
double oscillation(const ScalarField& u);

}  // namespace hjlab
