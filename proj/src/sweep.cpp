#include "ebp/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace ebp {

namespace {

// Shared per-node kernels. Parallel and serial sweeps both call these, so
// the two paths produce identical values node for node.

inline double log_abs_at(const BlaschkeProduct& b, double r, double theta) {
    return std::log(std::abs(evaluate(b, std::polar(r, theta))));
}

}  // namespace

std::vector<double> boundary_derivative_sweep(const BlaschkeProduct& b, const BoundaryGrid& grid) {
    std::vector<double> out(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            boundary_derivative_modulus(b, grid[static_cast<std::size_t>(i)].theta);
    return out;
}

std::vector<std::complex<double>> boundary_value_sweep(const BlaschkeProduct& b,
                                                       const BoundaryGrid& grid) {
    std::vector<std::complex<double>> out(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            evaluate_boundary(b, grid[static_cast<std::size_t>(i)].theta);
    return out;
}

std::vector<double> log_abs_sweep(const BlaschkeProduct& b, double r, const BoundaryGrid& grid) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("log_abs_sweep: r must lie in (0,1)");
    std::vector<double> out(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = log_abs_at(b, r, grid[static_cast<std::size_t>(i)].theta);
    return out;
}

std::vector<double> model_derivative_sweep(const ModelFunction& f, double r,
                                           const BoundaryGrid& grid) {
    std::vector<double> out(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            std::abs(derivative_boundary(f, r, grid[static_cast<std::size_t>(i)].theta));
    return out;
}

std::vector<std::complex<double>> model_value_sweep(const ModelFunction& f, double r,
                                                    const BoundaryGrid& grid) {
    std::vector<std::complex<double>> out(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            model_value(f, r, grid[static_cast<std::size_t>(i)].theta);
    return out;
}

std::vector<double> frostman_from_samples(const std::vector<double>& bdm,
                                          const std::vector<std::complex<double>>& values,
                                          std::complex<double> a) {
    if (bdm.size() != values.size())
        throw std::invalid_argument("frostman_from_samples: sample lengths differ");
    const double a_abs = std::abs(a);
    if (!(a_abs < 1.0)) throw std::domain_error("frostman_from_samples: |a| must be < 1");
    const double scale = 1.0 - a_abs * a_abs;
    std::vector<double> out(bdm.size());
    for (std::size_t i = 0; i < bdm.size(); ++i)
        out[i] = scale * bdm[i] / std::norm(1.0 - std::conj(a) * values[i]);
    return out;
}

namespace serial {

std::vector<double> boundary_derivative_sweep(const BlaschkeProduct& b, const BoundaryGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = boundary_derivative_modulus(b, grid[i].theta);
    return out;
}

std::vector<std::complex<double>> boundary_value_sweep(const BlaschkeProduct& b,
                                                       const BoundaryGrid& grid) {
    std::vector<std::complex<double>> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = evaluate_boundary(b, grid[i].theta);
    return out;
}

std::vector<double> log_abs_sweep(const BlaschkeProduct& b, double r, const BoundaryGrid& grid) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("log_abs_sweep: r must lie in (0,1)");
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = log_abs_at(b, r, grid[i].theta);
    return out;
}

std::vector<double> model_derivative_sweep(const ModelFunction& f, double r,
                                           const BoundaryGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = std::abs(derivative_boundary(f, r, grid[i].theta));
    return out;
}

std::vector<std::complex<double>> model_value_sweep(const ModelFunction& f, double r,
                                                    const BoundaryGrid& grid) {
    std::vector<std::complex<double>> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = model_value(f, r, grid[i].theta);
    return out;
}

}  // namespace serial

}  // namespace ebp
