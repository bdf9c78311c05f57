#pragma once

#include <Eigen/Dense>
#include <complex>

#include "offgrid/errors.hpp"
#include "offgrid/rng.hpp"

namespace offgrid {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Relative eigenvalue clamp used when factoring covariance matrices.
inline constexpr double kEigClampRel = 1e-10;

/// Absolute tolerance (relative to the largest entry) for Hermitian checks.
inline constexpr double kHermitianTol = 1e-12;

inline bool is_hermitian(const CMat& m, double tol = kHermitianTol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

namespace detail {

struct HermitianEig {
  Eigen::VectorXd values;
  CMat vectors;
};

inline HermitianEig hermitian_eig(const CMat& m, const char* caller) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw InvalidInputError(std::string(caller) + ": matrix must be square");
  if (!is_hermitian(m))
    throw InvalidInputError(std::string(caller) + ": matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> solver((m + m.adjoint()) * 0.5);
  if (solver.info() != Eigen::Success)
    throw NumericalError(std::string(caller) + ": eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline CMat symmetrized(const CMat& m) { return (m + m.adjoint()) * 0.5; }

}  // namespace detail

/// Unique Hermitian PSD square root, computed by eigendecomposition.
/// Eigenvalues below kEigClampRel * lambda_max are clamped to zero;
/// eigenvalues below -kEigClampRel * lambda_max are rejected as not PSD.
inline CMat hermitian_sqrt(const CMat& m) {
  auto eig = detail::hermitian_eig(m, "hermitian_sqrt");
  const double lambda_max = std::max(0.0, eig.values.maxCoeff());
  const double clamp = kEigClampRel * std::max(lambda_max, 1e-300);
  Eigen::VectorXd roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values[i];
    if (lambda < -clamp)
      throw NumericalError("hermitian_sqrt: matrix is not positive semidefinite");
    roots[i] = lambda <= clamp ? 0.0 : std::sqrt(lambda);
  }
  return detail::symmetrized(eig.vectors * roots.asDiagonal() *
                             eig.vectors.adjoint());
}

/// Hermitian inverse square root of a positive definite matrix.
inline CMat hermitian_inv_sqrt(const CMat& m) {
  auto eig = detail::hermitian_eig(m, "hermitian_inv_sqrt");
  const double lambda_max = eig.values.maxCoeff();
  if (!(lambda_max > 0.0) ||
      eig.values.minCoeff() <= kEigClampRel * lambda_max)
    throw NumericalError(
        "hermitian_inv_sqrt: matrix is singular or indefinite");
  Eigen::VectorXd roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    roots[i] = 1.0 / std::sqrt(eig.values[i]);
  return detail::symmetrized(eig.vectors * roots.asDiagonal() *
                             eig.vectors.adjoint());
}

/// Draws z = S w with S the Hermitian square root of cov and w a vector of
/// i.i.d. unit-variance circular complex normals, so E[z z^H] = cov.
/// Factors cov on every call; use GaussianSampler for bulk generation.
inline CVec sample_complex_gaussian(RngStream& rng, const CMat& cov) {
  const CMat s = hermitian_sqrt(cov);
  CVec w(cov.rows());
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = rng.complex_normal();
  return s * w;
}

/// Caches the square-root factor of a covariance for repeated draws.
class GaussianSampler {
 public:
  explicit GaussianSampler(const CMat& cov) : sqrt_cov_(hermitian_sqrt(cov)) {}

  CVec draw(RngStream& rng) const {
    CVec w(sqrt_cov_.rows());
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = rng.complex_normal();
    return sqrt_cov_ * w;
  }

  const CMat& sqrt_cov() const { return sqrt_cov_; }

 private:
  CMat sqrt_cov_;
};

}  // namespace offgrid
