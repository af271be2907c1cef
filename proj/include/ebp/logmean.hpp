#pragma once

#include <vector>

#include "ebp/blaschke.hpp"
#include "ebp/boundary.hpp"

namespace ebp {

/// T(r) = (1 / log r) (1/2pi) int log |B(r e^{i theta})| d theta, computed
/// exactly from the zeros as
///   T(r) = #{n : |z_n| <= r} + (1/log r) sum_{|z_n| >= r} log |z_n|.
/// This closed form is the primary path (exact and O(N)); the quadrature
/// below is the independent cross-check, not the other way around.

struct TExactDetail {
    double value = 0.0;
    double r_used = 0.0;  // differs from the requested r only after a collision nudge
    bool nudged = false;
};

/// If r collides with some modulus |z_n| the radius is shifted down by
/// 1e-12 (repeatedly, if needed) and the shift is recorded.
TExactDetail t_exact_detail(const BlaschkeProduct& b, double r);

double t_exact(const BlaschkeProduct& b, double r);

/// Quadrature route: weighted log |B| samples over the grid divided by
/// 2 pi log r. Requires every zero to sit at least 1e-9 away from the
/// circle of radius r, otherwise the integrand is near-singular on the
/// contour and the call throws.
double t_quadrature(const BlaschkeProduct& b, double r, const BoundaryGrid& grid);

/// T along the dyadic radii 1 - 2^{-N} together with the increment table
/// |T(1-2^{-N-1}) - T(1-2^{-N})|, N = 1..n_max.
struct LogMeanCurve {
    std::vector<double> radii;       // 1 - 2^{-N}, N = 1..n_max+1
    std::vector<double> t_exact;     // aligned with radii
    std::vector<double> t_quad;      // empty unless filled by the caller
    std::vector<double> increments;  // increments[N-1] for N = 1..n_max
    double m_observed = 0.0;         // max increment
    int nudge_count = 0;             // collision nudges encountered
};

/// n_max is capped at 50 so every radius 1 - 2^{-N-1} is still a double
/// strictly below 1.
LogMeanCurve dyadic_increments(const BlaschkeProduct& b, int n_max);

}  // namespace ebp
