#pragma once

#include <complex>
#include <vector>

#include "ebp/blaschke.hpp"
#include "ebp/boundary.hpp"
#include "ebp/modelspace.hpp"

namespace ebp {

/// Grid sweeps of the pointwise kernels. Every node is independent, so the
/// parallel versions split the node range across OpenMP threads and produce
/// the same values as the serial references in ebp::serial, which are kept
/// for testing and benchmarking.

/// |B'(e^{i theta})| at every node.
std::vector<double> boundary_derivative_sweep(const BlaschkeProduct& b, const BoundaryGrid& grid);

/// B(e^{i theta}) at every node.
std::vector<std::complex<double>> boundary_value_sweep(const BlaschkeProduct& b,
                                                       const BoundaryGrid& grid);

/// log |B(r e^{i theta})| at every node, r = 1 - gap_r.
std::vector<double> log_abs_sweep(const BlaschkeProduct& b, double r, const BoundaryGrid& grid);

/// |f'(r e^{i theta})| at every node.
std::vector<double> model_derivative_sweep(const ModelFunction& f, double r,
                                           const BoundaryGrid& grid);

/// f(r e^{i theta}) at every node.
std::vector<std::complex<double>> model_value_sweep(const ModelFunction& f, double r,
                                                    const BoundaryGrid& grid);

/// Frostman-shifted |(B_a)'| from precomputed |B'| and B boundary samples;
/// pure O(n) transform shared by the serial and parallel paths.
std::vector<double> frostman_from_samples(const std::vector<double>& bdm,
                                          const std::vector<std::complex<double>>& values,
                                          std::complex<double> a);

namespace serial {

std::vector<double> boundary_derivative_sweep(const BlaschkeProduct& b, const BoundaryGrid& grid);
std::vector<std::complex<double>> boundary_value_sweep(const BlaschkeProduct& b,
                                                       const BoundaryGrid& grid);
std::vector<double> log_abs_sweep(const BlaschkeProduct& b, double r, const BoundaryGrid& grid);
std::vector<double> model_derivative_sweep(const ModelFunction& f, double r,
                                           const BoundaryGrid& grid);
std::vector<std::complex<double>> model_value_sweep(const ModelFunction& f, double r,
                                                    const BoundaryGrid& grid);

}  // namespace serial

}  // namespace ebp
