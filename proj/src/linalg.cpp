#include "indh/linalg.hpp"

#include <cmath>
#include <limits>

namespace indh {

Complex root_of_unity(long long k, long long n) {
  long long r = k % n;
  if (r < 0) r += n;
  // exact values on the axes keep small cyclic tables free of rounding noise
  if (r == 0) return {1.0, 0.0};
  if (2 * r == n) return {-1.0, 0.0};
  if (4 * r == n) return {0.0, 1.0};
  if (4 * r == 3 * n) return {0.0, -1.0};
  const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  const CMatrix eye = CMatrix::Identity(a.rows(), a.cols());
  return max_abs_diff(a.adjoint() * a, eye);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

RVector singular_values(const CMatrix& a) {
  if (a.size() == 0) return RVector();
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues();
}

std::size_t numerical_rank(const CMatrix& a, double rel_tol) {
  const RVector s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = rel_tol * s(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return rank;
}

CMatrix hermitian_pseudo_solve(const CMatrix& gram, const CMatrix& rhs,
                               double rel_tol, std::size_t* rank) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram);
  const RVector& values = eig.eigenvalues();
  const CMatrix& vectors = eig.eigenvectors();
  const double top = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  const double cut = rel_tol * top;
  CMatrix projected = vectors.adjoint() * rhs;
  std::size_t kept = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > cut && top > 0.0) {
      projected.row(i) /= values(i);
      ++kept;
    } else {
      projected.row(i).setZero();
    }
  }
  if (rank) *rank = kept;
  return vectors * projected;
}

Eigen::MatrixXd helmert_basis(std::size_t n) {
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n > 0 ? n - 1 : 0, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (std::size_t x = 0; x < k; ++x) basis(k - 1, x) = scale;
    basis(k - 1, k) = -static_cast<double>(k) * scale;
  }
  return basis;
}

}  // namespace indh
