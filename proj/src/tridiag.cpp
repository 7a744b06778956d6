/// @file tridiag.cpp

#include "hjlab/tridiag.hpp"

#include <cstddef>
#include <stdexcept>

namespace hjlab {

void thomas(std::vector<double> lo, std::vector<double> di,
            std::vector<double> up, std::vector<double>& d) {
    const std::size_t n = d.size();
    if (lo.size() != n || di.size() != n || up.size() != n)
        throw std::invalid_argument("thomas: size mismatch");
    for (std::size_t i = 1; i < n; ++i) {
        const double m = lo[i] / di[i - 1];
        di[i] -= m * up[i - 1];
        d[i] -= m * d[i - 1];
    }
    d[n - 1] /= di[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        d[i] = (d[i] - up[i] * d[i + 1]) / di[i];
}

void thomas_periodic_const(double a, double b, double c, std::vector<double>& d) {
    const std::size_t n = d.size();
    if (n < 3) throw std::invalid_argument("thomas_periodic_const: need n >= 3");
    // Sherman-Morrison: perturb the first/last diagonal entries and correct
    // with a rank-one update.
    const double gamma = -b;
    std::vector<double> bb(n, b);
    bb[0] = b - gamma;
    bb[n - 1] = b - a * c / gamma;

    auto tri = [&](std::vector<double> rhs) {
        std::vector<double> cp(n), dp(n);
        cp[0] = c / bb[0];
        dp[0] = rhs[0] / bb[0];
        for (std::size_t i = 1; i < n; ++i) {
            const double m = bb[i] - a * cp[i - 1];
            cp[i] = c / m;
            dp[i] = (rhs[i] - a * dp[i - 1]) / m;
        }
        for (std::size_t i = n - 1; i-- > 0;)
            dp[i] -= cp[i] * dp[i + 1];
        return dp;
    };

    std::vector<double> y = tri(d);
    std::vector<double> uvec(n, 0.0);
    uvec[0] = gamma;
    uvec[n - 1] = c;
    std::vector<double> q = tri(uvec);
    const double fact = (y[0] + a * y[n - 1] / gamma) /
                        (1.0 + q[0] + a * q[n - 1] / gamma);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = y[i] - fact * q[i];
}

}  // namespace hjlab
