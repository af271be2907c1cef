#include "ebp/logmean.hpp"

#include <cmath>
#include <stdexcept>

#include "ebp/disc.hpp"
#include "ebp/sweep.hpp"

namespace ebp {

namespace {

double log_of_radius(double r) {
    // r - 1 is exact for r >= 0.5, so log1p keeps full accuracy near 1
    return r >= 0.5 ? std::log1p(r - 1.0) : std::log(r);
}

bool collides(const BlaschkeProduct& b, double r) {
    for (const Zero& z : b.zeros().entries())
        if (1.0 - z.eps == r) return true;
    return false;
}

}  // namespace

TExactDetail t_exact_detail(const BlaschkeProduct& b, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("t_exact: r must lie in (0,1)");

    TExactDetail detail;
    detail.r_used = r;
    while (collides(b, detail.r_used)) {
        detail.r_used -= 1e-12;
        detail.nudged = true;
        if (!(detail.r_used > 0.0)) throw std::domain_error("t_exact: collision nudge left (0,1)");
    }

    const double log_r = log_of_radius(detail.r_used);
    long count = 0;
    double tail = 0.0;
    for (const Zero& z : b.zeros().entries()) {
        if (1.0 - z.eps <= detail.r_used)
            ++count;  // |z_n| <= r
        else
            tail += std::log1p(-z.eps);  // log |z_n|
    }
    detail.value = static_cast<double>(count) + tail / log_r;
    return detail;
}

double t_exact(const BlaschkeProduct& b, double r) { return t_exact_detail(b, r).value; }

double t_quadrature(const BlaschkeProduct& b, double r, const BoundaryGrid& grid) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("t_quadrature: r must lie in (0,1)");
    for (const Zero& z : b.zeros().entries())
        if (std::abs((1.0 - z.eps) - r) < 1e-9)
            throw std::domain_error(
                "t_quadrature: a zero sits within 1e-9 of the integration circle");

    const std::vector<double> samples = log_abs_sweep(b, r, grid);
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double y = grid[i].weight * samples[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / (two_pi * log_of_radius(r));
}

LogMeanCurve dyadic_increments(const BlaschkeProduct& b, int n_max) {
    if (n_max < 1 || n_max > 50)
        throw std::invalid_argument("dyadic_increments: n_max must lie in [1,50]");

    LogMeanCurve curve;
    curve.radii.reserve(static_cast<std::size_t>(n_max) + 1);
    curve.t_exact.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max + 1; ++n) {
        const double r = 1.0 - std::ldexp(1.0, -n);
        const TExactDetail detail = t_exact_detail(b, r);
        curve.radii.push_back(r);
        curve.t_exact.push_back(detail.value);
        if (detail.nudged) ++curve.nudge_count;
    }
    curve.increments.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double inc = std::abs(curve.t_exact[static_cast<std::size_t>(n)] -
                                    curve.t_exact[static_cast<std::size_t>(n - 1)]);
        curve.increments.push_back(inc);
        curve.m_observed = std::max(curve.m_observed, inc);
    }
    return curve;
}

}  // namespace ebp
