/// @file tridiag.hpp
/// @brief Tridiagonal solvers: plain Thomas for bounded grids and the
///        Sherman-Morrison cyclic variant for periodic grids.

#pragma once

#include <vector>

namespace hjlab {

/// Solve a general tridiagonal system in place.  lo/di/up are the sub-,
/// main- and super-diagonal (lo[0] and up[n-1] unused); d is the RHS and
/// receives the solution.
void thomas(std::vector<double> lo, std::vector<double> di,
            std::vector<double> up, std::vector<double>& d);

/// Solve the cyclic tridiagonal system with constant coefficients
/// (a on the sub/wrap diagonal, b on the main, c on the super/wrap) via
/// Sherman-Morrison.  d receives the solution.
void thomas_periodic_const(double a, double b, double c, std::vector<double>& d);

}  // namespace hjlab
