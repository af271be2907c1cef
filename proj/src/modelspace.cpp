#include "ebp/modelspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ebp/disc.hpp"
#include "ebp/linalg.hpp"
#include "ebp/sweep.hpp"

namespace ebp {

namespace {

constexpr double kMinSeparation = 1e-12;
constexpr std::size_t kMaxSystem = 64;

std::pair<std::size_t, std::size_t> closest_pair(const ZeroSequence& zeros) {
    std::pair<std::size_t, std::size_t> pair{0, 0};
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < zeros.size(); ++j)
        for (std::size_t k = j + 1; k < zeros.size(); ++k) {
            const double d = pseudo_hyperbolic(zeros[j].eps, zeros[j].theta, zeros[k].eps,
                                               zeros[k].theta);
            if (d < best) {
                best = d;
                pair = {j, k};
            }
        }
    return pair;
}

double min_separation(const ZeroSequence& zeros) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < zeros.size(); ++j)
        for (std::size_t k = j + 1; k < zeros.size(); ++k)
            best = std::min(best, pseudo_hyperbolic(zeros[j].eps, zeros[j].theta, zeros[k].eps,
                                                    zeros[k].theta));
    return best;
}

/// Kernel Gram matrix in the x* A x convention of hermitian_quadform:
/// A_{jk} = sqrt(eps_j eps_k) <K_{z_k}, K_{z_j}> = sqrt(eps_j eps_k) / (1 - conj(z_k) z_j).
linalg::Matrix gram_matrix(const ZeroSequence& zeros) {
    const std::size_t n = zeros.size();
    linalg::Matrix g(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::complex<double> den =
                one_minus_zconj_w(zeros[k].eps, zeros[k].theta, zeros[j].eps, zeros[j].theta);
            g.at(j, k) = std::sqrt(zeros[j].eps) * std::sqrt(zeros[k].eps) / den;
        }
    }
    return g;
}

}  // namespace

ModelFunction::ModelFunction(ZeroSequence zeros, std::vector<std::complex<double>> coefficients)
    : zeros_(std::move(zeros)), coefficients_(std::move(coefficients)) {
    if (zeros_.size() != coefficients_.size())
        throw std::invalid_argument("model function: coefficient count must match zero count");
    if (zeros_.empty()) throw std::invalid_argument("model function: needs at least one kernel");
    if (zeros_.size() >= 2 && min_separation(zeros_) < kMinSeparation) {
        const auto [j, k] = closest_pair(zeros_);
        throw std::invalid_argument("model function: zeros " + std::to_string(j + 1) + " and " +
                                    std::to_string(k + 1) +
                                    " closer than 1e-12 in the pseudo-hyperbolic metric");
    }
}

double l2_norm(const ModelFunction& f) {
    const linalg::Matrix g = gram_matrix(f.zeros());
    const auto pivots = linalg::hermitian_pivots(g);
    if (pivots.min_pivot < -1e-9 * pivots.trace) {
        const auto [j, k] = closest_pair(f.zeros());
        throw std::runtime_error(
            "l2_norm: Gram matrix numerically indefinite; closest zeros are " +
            std::to_string(j + 1) + " and " + std::to_string(k + 1));
    }
    const double sq = linalg::hermitian_quadform(g, f.coefficients());
    return std::sqrt(std::max(sq, 0.0));
}

std::complex<double> model_value(const ModelFunction& f, double r, double theta) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("model_value: r must lie in [0,1]");
    const double gap = 1.0 - r;
    std::complex<double> sum{0.0, 0.0};
    const auto& zeros = f.zeros();
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        const std::complex<double> den =
            one_minus_zconj_w(zeros[k].eps, zeros[k].theta, gap, theta);
        sum += f.coefficients()[k] * std::sqrt(zeros[k].eps) / den;
    }
    return sum;
}

std::complex<double> derivative_boundary(const ModelFunction& f, double r, double theta) {
    if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("derivative_boundary: r must lie in (0,1]");
    const double gap = 1.0 - r;
    std::complex<double> sum{0.0, 0.0};
    const auto& zeros = f.zeros();
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        const std::complex<double> den =
            one_minus_zconj_w(zeros[k].eps, zeros[k].theta, gap, theta);
        const std::complex<double> zk_conj = std::polar(1.0 - zeros[k].eps, -zeros[k].theta);
        sum += f.coefficients()[k] * std::sqrt(zeros[k].eps) * zk_conj / (den * den);
    }
    return sum;
}

double weak23_statistic(const ModelFunction& f, double r, const BoundaryGrid& grid) {
    const double norm = l2_norm(f);
    if (!(norm > 0.0)) throw std::invalid_argument("weak23_statistic: ||f||_2 must be positive");
    std::vector<double> samples = model_derivative_sweep(f, r, grid);
    for (double& s : samples) s /= norm;
    return weak_quasinorm(samples, grid, 2.0 / 3.0).quasinorm;
}

ClaimStatistic claim_statistic(const BlaschkeProduct& b, const ModelFunction& h,
                               const BoundaryGrid& grid) {
    for (std::size_t j = 0; j < h.zeros().size(); ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < b.zeros().size(); ++k)
            best = std::min(best, pseudo_hyperbolic(h.zeros()[j].eps, h.zeros()[j].theta,
                                                    b.zeros()[k].eps, b.zeros()[k].theta));
        if (!(best <= kMinSeparation))
            throw std::invalid_argument("claim_statistic: kernel " + std::to_string(j + 1) +
                                        " of h does not sit on a zero of B");
    }

    const std::vector<double> bdm = boundary_derivative_sweep(b, grid);
    const std::vector<std::complex<double>> hv = model_value_sweep(h, 1.0, grid);
    std::vector<double> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = bdm[i] * std::abs(hv[i]);

    ClaimStatistic stat;
    stat.quasinorm = weak_quasinorm(samples, grid, 2.0 / 3.0).quasinorm;
    stat.h_norm = l2_norm(h);
    stat.ratio = stat.quasinorm / std::pow(stat.h_norm, 2.0 / 3.0);
    return stat;
}

InterpolationResult interpolation_solve(const ZeroSequence& zeros,
                                        std::span<const std::complex<double>> targets) {
    const std::size_t n = zeros.size();
    if (n == 0) throw std::invalid_argument("interpolation_solve: empty zero set");
    if (n != targets.size())
        throw std::invalid_argument("interpolation_solve: target count must match zero count");
    if (n > kMaxSystem)
        throw std::invalid_argument("interpolation_solve: system size capped at 64");

    // A_{mk} = sqrt(eps_k) / (1 - conj(z_k) z_m)
    linalg::Matrix a(n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k)
            a.at(m, k) = std::sqrt(zeros[k].eps) /
                         one_minus_zconj_w(zeros[k].eps, zeros[k].theta, zeros[m].eps,
                                           zeros[m].theta);

    // Skeel condition: row-scaling invariant, so the eps^{-1/2} spread of
    // raw row norms does not masquerade as ill-conditioning.
    const double condition = linalg::skeel_condition(a);
    if (!(condition <= 1e12))
        throw std::runtime_error("interpolation_solve: condition estimate " +
                                 std::to_string(condition) +
                                 " exceeds 1e12; zeros insufficiently separated");

    auto beta = linalg::solve(a, targets);
    ZeroSequence copy = zeros;
    return InterpolationResult{ModelFunction(std::move(copy), std::move(beta)), condition};
}

std::vector<WitnessRow> divergence_witness(const ZeroSequence& zeros, std::span<const int> m_list,
                                           WitnessWeight weight, int base_count,
                                           int refine_factor) {
    if (m_list.empty()) throw std::invalid_argument("divergence_witness: empty M list");
    for (std::size_t i = 0; i < m_list.size(); ++i) {
        if (m_list[i] < 1 || m_list[i] > 40)
            throw std::invalid_argument("divergence_witness: M values must lie in [1,40]");
        if (i > 0 && m_list[i] <= m_list[i - 1])
            throw std::invalid_argument("divergence_witness: M list must be increasing");
    }
    if (static_cast<std::size_t>(m_list.back()) > zeros.size())
        throw std::invalid_argument("divergence_witness: sequence shorter than max M");

    std::vector<WitnessRow> rows;
    rows.reserve(m_list.size());
    for (int m : m_list) {
        const ZeroSequence head = zeros.prefix(static_cast<std::size_t>(m));
        std::vector<std::complex<double>> targets(static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) {
            const double eps = head[static_cast<std::size_t>(k - 1)].eps;
            targets[static_cast<std::size_t>(k - 1)] =
                weight == WitnessWeight::Divergent ? 1.0 / (std::sqrt(eps) * k)
                                                   : std::pow(static_cast<double>(k), -2.0);
        }
        InterpolationResult solved = interpolation_solve(head, targets);
        const BoundaryGrid grid = make_grid(head, base_count, refine_factor);
        const std::vector<double> samples = model_derivative_sweep(solved.f, 1.0, grid);
        rows.push_back({m, hardy_quasinorm(samples, grid, 2.0 / 3.0), solved.condition});
    }
    return rows;
}

double min_derivative_gap_product(const BlaschkeProduct& b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < b.zeros().size(); ++n)
        best = std::min(best, std::abs(derivative_at_zero(b, n)) * b.zeros()[n].eps);
    return best;
}

}  // namespace ebp
