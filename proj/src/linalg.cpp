#include "ebp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ebp::linalg {

double norm_1(const Matrix& m) {
    double worst = 0.0;
    for (std::size_t j = 0; j < m.order(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m.order(); ++i) col += std::abs(m.at(i, j));
        worst = std::max(worst, col);
    }
    return worst;
}

LuFactors::LuFactors(Matrix m) : lu_(std::move(m)), perm_(lu_.order()) {
    const std::size_t n = lu_.order();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu_.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu_.at(i, k));
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best == 0.0) throw std::runtime_error("linalg: singular matrix in LU");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_.at(k, j), lu_.at(pivot, j));
            std::swap(perm_[k], perm_[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx l = lu_.at(i, k) / lu_.at(k, k);
            lu_.at(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) lu_.at(i, j) -= l * lu_.at(k, j);
        }
    }
}

std::vector<cplx> LuFactors::solve(std::span<const cplx> rhs) const {
    const std::size_t n = lu_.order();
    if (rhs.size() != n) throw std::invalid_argument("linalg: rhs size mismatch");

    std::vector<cplx> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= lu_.at(i, j) * x[j];
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_.at(ii, j) * x[j];
        x[ii] /= lu_.at(ii, ii);
    }
    return x;
}

Matrix LuFactors::inverse() const {
    const std::size_t n = lu_.order();
    Matrix inv(n);
    std::vector<cplx> e(n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const auto col = solve(e);
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = col[i];
        e[j] = 0.0;
    }
    return inv;
}

double condition_1(const Matrix& m) {
    const double a = norm_1(m);
    const LuFactors lu(m);
    return a * norm_1(lu.inverse());
}

double skeel_condition(const Matrix& m) {
    const std::size_t n = m.order();
    const Matrix inv = LuFactors(m).inverse();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double entry = 0.0;
            for (std::size_t k = 0; k < n; ++k) entry += std::abs(inv.at(i, k)) * std::abs(m.at(k, j));
            row += entry;
        }
        worst = std::max(worst, row);
    }
    return worst;
}

std::vector<cplx> solve(const Matrix& a, std::span<const cplx> rhs) {
    return LuFactors(a).solve(rhs);
}

PivotReport hermitian_pivots(const Matrix& m) {
    const std::size_t n = m.order();
    PivotReport report;
    for (std::size_t i = 0; i < n; ++i) report.trace += m.at(i, i).real();

    // L stored unit-lower, d the real pivots
    std::vector<cplx> l(n * n, cplx{0.0, 0.0});
    std::vector<double> d(n, 0.0);
    report.min_pivot = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        double dj = m.at(j, j).real();
        for (std::size_t k = 0; k < j; ++k) dj -= d[k] * std::norm(l[j * n + k]);
        d[j] = dj;
        report.min_pivot = std::min(report.min_pivot, dj);
        if (dj == 0.0) break;  // cannot continue the elimination
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx lij = m.at(i, j);
            for (std::size_t k = 0; k < j; ++k)
                lij -= l[i * n + k] * d[k] * std::conj(l[j * n + k]);
            l[i * n + j] = lij / dj;
        }
    }
    if (n == 0) report.min_pivot = 0.0;
    return report;
}

double hermitian_quadform(const Matrix& a, std::span<const cplx> x) {
    const std::size_t n = a.order();
    if (x.size() != n) throw std::invalid_argument("linalg: vector size mismatch");
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sum += std::conj(x[i]) * a.at(i, j) * x[j];
    return sum.real();
}

}  // namespace ebp::linalg
