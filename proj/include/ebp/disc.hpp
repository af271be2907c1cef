#pragma once

#include <cmath>
#include <complex>

namespace ebp {

inline constexpr double two_pi = 6.283185307179586476925286766559;

inline std::complex<double> unit(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

/// Reduce an angle into [0, 2*pi).
inline double wrap_angle(double theta) {
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

/// |e^{i t} - z|^2 for z = (1-eps) e^{i theta}, evaluated as
/// eps^2 + 4 (1-eps) sin^2((t-theta)/2). Every term is nonnegative, so the
/// value keeps full relative accuracy however small eps and t-theta are.
inline double boundary_dist_sq(double eps, double dtheta) {
    const double s = std::sin(0.5 * dtheta);
    return eps * eps + 4.0 * (1.0 - eps) * s * s;
}

/// 1 - conj(z) * w for z = (1-eps) e^{i theta_z} and w = (1-gap_w) e^{i theta_w}.
///
/// The real part is grouped as (gap_w) + (1-gap_w) * (2 sin^2(d/2) + eps cos d),
/// which avoids the cancellation of the naive 1 - |z||w| cos d when both the
/// gap and the angle difference are tiny. Valid for gap_w >= 0 (gap_w = 0 is
/// the unit circle).
inline std::complex<double> one_minus_zconj_w(double eps, double theta_z, double gap_w,
                                              double theta_w) {
    const double d = theta_w - theta_z;
    const double s = std::sin(0.5 * d);
    const double cos_d = 1.0 - 2.0 * s * s;
    const double sin_d = 2.0 * s * std::cos(0.5 * d);
    const double r = 1.0 - gap_w;
    return {gap_w + r * (2.0 * s * s + eps * cos_d), -r * (1.0 - eps) * sin_d};
}

/// z - w in the same parametrization, as e^{i theta_z} * ((1-eps) - r e^{i d}).
inline std::complex<double> zero_minus_w(double eps, double theta_z, double gap_w,
                                         double theta_w) {
    const double d = theta_w - theta_z;
    const double s = std::sin(0.5 * d);
    const double sin_d = 2.0 * s * std::cos(0.5 * d);
    const double r = 1.0 - gap_w;
    const std::complex<double> radial{(gap_w - eps) + 2.0 * r * s * s, -r * sin_d};
    return unit(theta_z) * radial;
}

/// Pseudo-hyperbolic distance |z-w| / |1 - conj(w) z| between two disc points
/// given as (gap, angle) pairs.
inline double pseudo_hyperbolic(double eps_z, double theta_z, double eps_w, double theta_w) {
    const double num = std::abs(zero_minus_w(eps_z, theta_z, eps_w, theta_w));
    const double den = std::abs(one_minus_zconj_w(eps_w, theta_w, eps_z, theta_z));
    return num / den;
}

}  // namespace ebp
