#include "ebp/blaschke.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ebp/disc.hpp"

namespace ebp {

namespace {

constexpr std::size_t kMaxFactors = 10000;

/// One factor e^{-i theta_n} (z_n - z) / (1 - conj(z_n) z).
std::complex<double> factor_at(const Zero& zn, std::complex<double> z) {
    if (zn.eps == 1.0) return -z;  // zero at the origin
    const std::complex<double> num = std::polar(1.0 - zn.eps, zn.theta) - z;
    const std::complex<double> den = 1.0 - std::polar(1.0 - zn.eps, -zn.theta) * z;
    if (std::abs(den) < 1e-300)
        throw std::domain_error("blaschke: evaluation point within 1e-300 of a pole");
    return unit(-zn.theta) * num / den;
}

/// d/dz of the factor: -e^{-i theta_n} (1-|z_n|^2) / (1 - conj(z_n) z)^2.
std::complex<double> factor_derivative_at(const Zero& zn, std::complex<double> z) {
    if (zn.eps == 1.0) return -1.0;
    const double one_minus_sq = zn.eps * (2.0 - zn.eps);  // 1 - |z_n|^2
    const std::complex<double> den = 1.0 - std::polar(1.0 - zn.eps, -zn.theta) * z;
    if (std::abs(den) < 1e-300)
        throw std::domain_error("blaschke: evaluation point within 1e-300 of a pole");
    return -unit(-zn.theta) * one_minus_sq / (den * den);
}

void require_in_closed_disc(std::complex<double> z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("blaschke: evaluation point outside the closed unit disc");
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(ZeroSequence zeros, std::complex<double> psi)
    : zeros_(std::move(zeros)), psi_(psi) {
    if (std::abs(std::abs(psi_) - 1.0) > 1e-12)
        throw std::invalid_argument("blaschke: constant must be unimodular");
    if (zeros_.size() > kMaxFactors)
        throw std::invalid_argument("blaschke: more than 10^4 factors not supported");
}

std::complex<double> evaluate(const BlaschkeProduct& b, std::complex<double> z) {
    require_in_closed_disc(z);
    std::complex<double> value = b.psi();
    for (const Zero& zn : b.zeros().entries()) value *= factor_at(zn, z);
    return value;
}

std::complex<double> evaluate_boundary(const BlaschkeProduct& b, double theta) {
    const std::complex<double> xi = unit(theta);
    std::complex<double> value = b.psi();
    for (const Zero& zn : b.zeros().entries()) {
        if (zn.eps == 1.0) {
            value *= -xi;
            continue;
        }
        // 1 - conj(z_n) e^{i t} = -e^{i t} conj(z_n - e^{i t}), so the factor
        // reduces to -e^{-i(t+theta_n)} w / conj(w); the ratio has modulus 1
        // regardless of how much cancellation w itself suffered.
        const std::complex<double> w = std::polar(1.0 - zn.eps, zn.theta) - xi;
        value *= -unit(-(theta + zn.theta)) * w / std::conj(w);
    }
    return value;
}

std::complex<double> derivative(const BlaschkeProduct& b, std::complex<double> z) {
    require_in_closed_disc(z);
    const auto& zeros = b.zeros().entries();
    const std::size_t n = zeros.size();
    if (n == 0) return 0.0;

    std::vector<std::complex<double>> factors(n);
    for (std::size_t i = 0; i < n; ++i) factors[i] = factor_at(zeros[i], z);

    // suffix[i] = prod_{j>i} factors[j]; the prefix runs along the main loop
    std::vector<std::complex<double>> suffix(n, 1.0);
    for (std::size_t i = n - 1; i > 0; --i) suffix[i - 1] = suffix[i] * factors[i];

    std::complex<double> sum = 0.0;
    std::complex<double> prefix = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += prefix * factor_derivative_at(zeros[i], z) * suffix[i];
        prefix *= factors[i];
    }
    return b.psi() * sum;
}

std::complex<double> derivative_at_zero(const BlaschkeProduct& b, std::size_t index) {
    const auto& zeros = b.zeros().entries();
    if (index >= zeros.size()) throw std::out_of_range("derivative_at_zero: index out of range");
    const Zero& zn = zeros[index];

    // b_n'(z_n) = -e^{-i theta_n} / (1 - |z_n|^2)
    std::complex<double> value = b.psi();
    if (zn.eps == 1.0)
        value *= -1.0;
    else
        value *= -unit(-zn.theta) / (zn.eps * (2.0 - zn.eps));

    for (std::size_t m = 0; m < zeros.size(); ++m) {
        if (m == index) continue;
        const Zero& zm = zeros[m];
        if (zm.eps == 1.0) {
            value *= -std::polar(1.0 - zn.eps, zn.theta);
            continue;
        }
        const std::complex<double> num = zero_minus_w(zm.eps, zm.theta, zn.eps, zn.theta);
        const std::complex<double> den = one_minus_zconj_w(zm.eps, zm.theta, zn.eps, zn.theta);
        value *= unit(-zm.theta) * num / den;
    }
    return value;
}

double boundary_derivative_modulus(const BlaschkeProduct& b, double theta) {
    double sum = 0.0;
    for (const Zero& zn : b.zeros().entries())
        sum += zn.eps * (2.0 - zn.eps) / boundary_dist_sq(zn.eps, theta - zn.theta);
    return sum;
}

double frostman_shift_boundary(const BlaschkeProduct& b, std::complex<double> a, double theta) {
    const double a_abs = std::abs(a);
    if (!(a_abs < 1.0)) throw std::domain_error("frostman: |a| must be < 1");
    const double bdm = boundary_derivative_modulus(b, theta);
    const std::complex<double> den = 1.0 - std::conj(a) * evaluate_boundary(b, theta);
    return (1.0 - a_abs * a_abs) * bdm / std::norm(den);
}

}  // namespace ebp
