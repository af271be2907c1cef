#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ebp::linalg {

using cplx = std::complex<double>;

/// Dense square complex matrix, row major. Sized for the model-space solves
/// (order <= 64); nothing here is tuned beyond that.
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, cplx{0.0, 0.0}) {}

    std::size_t order() const { return n_; }
    cplx& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<cplx> a_;
};

/// Max column sum of moduli.
double norm_1(const Matrix& m);

/// LU factorization with partial pivoting. Throws on exactly singular input.
class LuFactors {
public:
    explicit LuFactors(Matrix m);

    std::vector<cplx> solve(std::span<const cplx> rhs) const;
    Matrix inverse() const;

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
};

/// 1-norm condition number via the explicit inverse.
double condition_1(const Matrix& m);

/// Skeel condition number || |A^{-1}| |A| ||_inf, computed from the explicit
/// inverse. Invariant under row scaling, so it measures the accuracy
/// attainable by the solve rather than the raw scale spread of the matrix.
double skeel_condition(const Matrix& m);

/// Solve A x = b.
std::vector<cplx> solve(const Matrix& a, std::span<const cplx> rhs);

/// LDL^H pivots of a Hermitian matrix (lower triangle read), used as a
/// positive-semidefiniteness probe: a pivot below -tol * trace flags the
/// matrix as numerically indefinite. Factorization stops early if a pivot
/// hits zero; min_pivot reports the worst pivot seen.
struct PivotReport {
    double min_pivot = 0.0;
    double trace = 0.0;
};

PivotReport hermitian_pivots(const Matrix& m);

/// Hermitian quadratic form Re(x* A x); the imaginary residue of the sum is
/// discarded (it is rounding noise for Hermitian A).
double hermitian_quadform(const Matrix& a, std::span<const cplx> x);

}  // namespace ebp::linalg
