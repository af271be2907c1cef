#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ebp/blaschke.hpp"
#include "ebp/boundary.hpp"
#include "ebp/zeroseq.hpp"

namespace ebp {

/// Finite combination of normalized reproducing kernels at distinct disc
/// points,
///   f(z) = sum_k beta_k (1-|z_k|)^{1/2} / (1 - conj(z_k) z).
/// These span a dense subset of the orthogonal complement of B H^2 when the
/// z_k run over the zeros of B. Points must be pairwise separated by at
/// least 1e-12 in the pseudo-hyperbolic metric.
class ModelFunction {
public:
    ModelFunction(ZeroSequence zeros, std::vector<std::complex<double>> coefficients);

    const ZeroSequence& zeros() const { return zeros_; }
    const std::vector<std::complex<double>>& coefficients() const { return coefficients_; }
    std::size_t terms() const { return coefficients_.size(); }

private:
    ZeroSequence zeros_;
    std::vector<std::complex<double>> coefficients_;
};

/// Exact L^2 norm through the kernel Gram matrix,
///   ||f||^2 = sum_{j,k} conj(beta_j) beta_k (1-|z_j|)^{1/2} (1-|z_k|)^{1/2} / (1 - z_k conj(z_j)).
/// Throws if the Gram matrix is numerically indefinite (an LDL^H pivot below
/// -1e-9 * trace), naming the closest zero pair.
double l2_norm(const ModelFunction& f);

/// f(r e^{i theta}), r <= 1; kernels are analytic across the circle away
/// from the reflected points 1/conj(z_k).
std::complex<double> model_value(const ModelFunction& f, double r, double theta);

/// f'(r e^{i theta}) = sum_k beta_k (1-|z_k|)^{1/2} conj(z_k) / (1 - conj(z_k) r e^{i theta})^2,
/// with the denominators formed in the (eps, theta) parametrization so the
/// spike profile near deep zeros keeps full relative accuracy.
std::complex<double> derivative_boundary(const ModelFunction& f, double r, double theta);

/// Weak-L^{2/3} quasinorm of |f'(r e^{i theta})| / ||f||_2 over the grid.
double weak23_statistic(const ModelFunction& f, double r, const BoundaryGrid& grid);

/// sup lambda^{2/3} m(lambda) for |B' h| on the boundary, reported next to
/// ||h||_2^{2/3}; their ratio is the constant in the weak bound for B'h.
struct ClaimStatistic {
    double quasinorm = 0.0;
    double h_norm = 0.0;
    double ratio = 0.0;
};

/// Requires every zero of h to be (within 1e-12 pseudo-hyperbolic) a zero
/// of b.
ClaimStatistic claim_statistic(const BlaschkeProduct& b, const ModelFunction& h,
                               const BoundaryGrid& grid);

struct InterpolationResult {
    ModelFunction f;
    double condition = 0.0;
};

/// Coefficients beta with f(z_m) = w_m, by a dense partial-pivoted solve of
/// the kernel collocation system. System size capped at 64; a 1-norm
/// condition estimate above 1e12 is reported as an error (zeros
/// insufficiently separated).
InterpolationResult interpolation_solve(const ZeroSequence& zeros,
                                        std::span<const std::complex<double>> targets);

enum class WitnessWeight {
    Divergent,  // w_n = (1-|z_n|)^{-1/2} / n : sum |w|^2 (1-|z|) finite, sum |w|^{2/3} (1-|z|)^{1/3} infinite
    Control,    // w_n = n^{-2} : both sums finite
};

struct WitnessRow {
    int m = 0;
    double h23_quasinorm = 0.0;
    double condition = 0.0;
};

/// Growth table of the H^{2/3} quasinorm of f_M' where f_M interpolates the
/// chosen weights on the first M zeros. With the divergent weight the table
/// grows with M; with the control weight it stays bounded.
std::vector<WitnessRow> divergence_witness(const ZeroSequence& zeros, std::span<const int> m_list,
                                           WitnessWeight weight, int base_count = 4096,
                                           int refine_factor = 32);

/// min_n |B'(z_n)| (1-|z_n|) over the zeros, the observed interpolation
/// lower bound for the generator.
double min_derivative_gap_product(const BlaschkeProduct& b);

}  // namespace ebp
