#pragma once

#include <complex>

#include "ebp/zeroseq.hpp"

namespace ebp {

/// Finite Blaschke product psi * prod_n e^{-i theta_n} (z_n - z)/(1 - conj(z_n) z)
/// with |psi| = 1. The factor for a zero at the origin is -z (the usual
/// convention conj(z)/|z| = 1 at z = 0).
///
/// Factors accumulate in the stored zero order, innermost first; with at
/// most 10^4 factors of modulus <= 1 no rescaling is needed, and that cap
/// is enforced at construction.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(ZeroSequence zeros, std::complex<double> psi = 1.0);

    const ZeroSequence& zeros() const { return zeros_; }
    std::complex<double> psi() const { return psi_; }
    std::size_t degree() const { return zeros_.size(); }

private:
    ZeroSequence zeros_;
    std::complex<double> psi_;
};

/// Value at z, |z| <= 1 + 1e-12. Throws on points outside that closed disc
/// and on pole proximity |1 - conj(z_n) z| < 1e-300.
std::complex<double> evaluate(const BlaschkeProduct& b, std::complex<double> z);

/// Value at e^{i theta}. Each factor is formed as a ratio w / conj(w) times
/// a rotation, so the result has modulus 1 to machine precision even when
/// theta sits within rounding distance of a zero angle.
std::complex<double> evaluate_boundary(const BlaschkeProduct& b, double theta);

/// Derivative at z, |z| < 1, by the product rule over prefix/suffix
/// products. No logarithmic-derivative division, so the value is exact at
/// and near the zeros themselves.
std::complex<double> derivative(const BlaschkeProduct& b, std::complex<double> z);

/// Derivative at the zero with the given index,
///   B'(z_n) = psi * b_n'(z_n) * prod_{m != n} b_m(z_n),
/// formed entirely in the (eps, theta) parametrization. Works for gaps far
/// below machine epsilon, where z_n itself is not representable as a
/// Cartesian point off the unit circle.
std::complex<double> derivative_at_zero(const BlaschkeProduct& b, std::size_t index);

/// Boundary modulus of the derivative,
///   |B'(e^{i theta})| = sum_n (1-|z_n|^2) / |e^{i theta} - z_n|^2,
/// evaluated as sum eps(2-eps) / (eps^2 + 4(1-eps) sin^2((theta-theta_n)/2)).
/// Exact for finite products at every boundary point.
double boundary_derivative_modulus(const BlaschkeProduct& b, double theta);

/// Boundary derivative modulus of the shift (B-a)/(1 - conj(a) B), |a| < 1:
///   (1-|a|^2) |B'| / |1 - conj(a) B(e^{i theta})|^2.
/// The denominator stays >= (1-|a|)^2 since |B| = 1 on the circle.
double frostman_shift_boundary(const BlaschkeProduct& b, std::complex<double> a, double theta);

}  // namespace ebp
