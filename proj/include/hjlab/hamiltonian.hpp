/// @file hamiltonian.hpp
/// @brief Catalog of Hamiltonians H(p) with evaluators, gradients, structure
///        constants, and a Legendre transform for the Hopf-Lax oracle.
///
/// Every catalog member is radial, H(p) = phi(|p|), which is what the
/// evaluators exploit: a scalar profile phi and its derivative determine both
/// the 1D and 2D evaluators and D_pH = phi'(|p|) p/|p|.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hjlab {

/// Structure constants of the four growth/convexity assumptions.  A missing
/// optional means "not declared" for that member.
struct StructureConstants {
    std::optional<double> C1, C1t;  // D_pH.p - H >= C1|p|^gamma - C1t
    std::optional<double> C2, C2t;  // x-derivative bounds (identically 0 here)
    std::optional<double> C3, C3t;
    std::optional<double> C4, C4t;  // D^2H xi.xi >= C4|p|^{gamma-2}|xi|^2 - C4t|xi|^2
};

struct HamiltonianSpec {
    std::string id;
    std::function<double(double)> phi;    // H as a function of r = |p|
    std::function<double(double)> dphi;   // phi'
    double gamma = 2.0;
    StructureConstants constants;
    bool convex = true;
    bool legendre_available = true;
    bool power_closed_form = false;       // Legendre has closed form |q|^g'/g'

    double eval1(double p) const { return phi(std::abs(p)); }
    double grad1(double p) const {
        const double r = std::abs(p);
        return r == 0.0 ? 0.0 : dphi(r) * (p > 0 ? 1.0 : -1.0);
    }
    double eval2(double px, double py) const { return phi(std::hypot(px, py)); }
    std::array<double, 2> grad2(double px, double py) const {
        const double r = std::hypot(px, py);
        if (r == 0.0) return {0.0, 0.0};
        const double s = dphi(r) / r;
        return {s * px, s * py};
    }
};

/// Per-assumption result of a structure check: minimal slack over the sample
/// set, or "not declared".
struct StructureReport {
    struct Entry {
        std::string assumption;
        bool declared = false;
        bool trivially_satisfied = false;  // x-independent catalog, (H2)/(H3)
        double min_slack = 0.0;
        bool pass = true;
    };
    std::vector<Entry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/// Check the declared constants against dense |p| samples (default 1000
/// points over [0, 10]); Hessian by central differences.
StructureReport verify_structure(const HamiltonianSpec& H,
                                 int samples = 1000, double p_max = 10.0);

/// Fenchel conjugate L(q) = sup_p (p.q - H(p)); radial profile allows a 1D
/// sup over r >= 0.  Power members use the closed form |q|^{g'}/g'.
double legendre(const HamiltonianSpec& H, double q_norm);

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------
HamiltonianSpec make_quadratic();             // |p|^2/2
HamiltonianSpec make_power(double gamma);     // |p|^gamma/gamma, gamma in {1.5,2,3}
HamiltonianSpec make_eikonal();               // |p| (stationary examples only)
HamiltonianSpec make_nonconvex_h1();          // ((|p|^2-1)^2-1)/(|p|^2+1)
HamiltonianSpec make_zero();                  // H == 0 (linear stationary example)

/// Lookup by id string ("quadratic", "power1.5", "power2", "power3",
/// "eikonal", "nonconvex-h1"); throws on unknown id.
HamiltonianSpec hamiltonian_by_id(const std::string& id);

}  // namespace hjlab
