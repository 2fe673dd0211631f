#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace indh {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// e^{2πi k/n}
Complex root_of_unity(long long k, long long n);

/// Largest singular value. 1x1 matrices short-circuit to |a|.
double operator_norm(const CMatrix& a);

/// max_{ij} |a_ij - b_ij|; infinity on shape mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// max_{ij} |(a^* a - I)_ij|
double unitarity_defect(const CMatrix& a);

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Singular values in decreasing order.
RVector singular_values(const CMatrix& a);

/// Numerical rank: number of singular values above rel_tol * sigma_max.
std::size_t numerical_rank(const CMatrix& a, double rel_tol);

/// Solves gram * x = rhs for Hermitian positive semidefinite `gram` by
/// eigen-decomposition, discarding eigenvalues below rel_tol * lambda_max.
/// Returns the minimum-norm least-squares solution. `rank` receives the
/// number of eigenvalues kept.
CMatrix hermitian_pseudo_solve(const CMatrix& gram, const CMatrix& rhs,
                               double rel_tol, std::size_t* rank = nullptr);

/// Orthonormal basis (rows) of the sum-zero subspace of C^n (Helmert basis).
Eigen::MatrixXd helmert_basis(std::size_t n);

}  // namespace indh
