#pragma once

#include "speclab/constructors.hpp"
#include "speclab/graph.hpp"

#include <cstddef>
#include <vector>

namespace speclab {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxIter = 100000;

struct SpectralResult {
    double rho = 0.0;
    /// Perron vector of the maximising component, max entry exactly 1, zero
    /// outside that component.
    std::vector<double> vector;
    /// max_u |(A x)_u - rho x_u|
    double residual = 0.0;
    std::size_t iterations = 0;
};

/// Spectral radius by power iteration on A + I, run per connected component
/// from the all-ones vector; rho is the Rayleigh quotient of the final
/// iterate. The shift keeps bipartite components from oscillating.
/// Throws EmptyGraph for n = 0 and ConvergenceFailure when max_iter is hit.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTolerance,
                               std::size_t max_iter = kDefaultMaxIter);

/// Largest eigenvalue of a small (k <= 4) nonnegative matrix with real
/// spectrum, e.g. an equitable quotient matrix.
double quotient_spectral_radius(const std::vector<std::vector<double>>& q);

/// Analytic spectral radius for Complete, Cycle, CompleteBipartite,
/// KsJoinIndependent and KtJoinMatching; UnsupportedFamily otherwise.
double rho_closed_form(const FamilySpec& spec);

struct PerronAudit {
    double min_entry = 0.0;
    Vertex argmin = 0;
    double inverse_rho = 0.0;
    double margin = 0.0;  // min_entry - 1/rho
    bool satisfied = false;  // margin >= -tol
};

/// Compares min_u x_u with 1/rho. The inequality is only a theorem for
/// spectral-extremal graphs of minor-closed families, so this never throws on
/// violation; it classifies. Throws Disconnected for disconnected g.
PerronAudit verify_perron_bound(const Graph& g, const SpectralResult& result, double tol);

}  // namespace speclab
