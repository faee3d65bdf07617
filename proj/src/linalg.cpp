#include "entcorr/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "entcorr/error.hpp"
#include "entcorr/tolerance.hpp"

namespace entcorr {

double hermiticity_error(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DomainError("hermitian_eig: matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw DomainError("hermitian_eig: non-finite entries");
  const double err = hermiticity_error(m);
  if (err > tol::herm) {
    throw DomainError("hermitian_eig: matrix is not Hermitian (deviation " + std::to_string(err) + ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw InternalError("hermitian_eig: solver did not converge");

  // Eigen returns ascending order.
  const Eigen::Index n = m.rows();
  HermitianEig out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double eigen_noise_floor(const RealVector& values) {
  if (values.size() == 0) return 0.0;
  const double scale = values.cwiseAbs().maxCoeff();
  return 16.0 * static_cast<double>(values.size()) * std::numeric_limits<double>::epsilon() * scale;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  const HermitianEig eig = hermitian_eig(m);
  const double floor = eigen_noise_floor(eig.values);
  RealVector roots(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values(k);
    if (lambda < -tol::psd) {
      throw DomainError("matrix_sqrt_psd: negative eigenvalue " + std::to_string(lambda));
    }
    roots(k) = lambda > floor ? std::sqrt(lambda) : 0.0;
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix cayley_unitary(const ComplexMatrix& hermitian, double step) {
  const Eigen::Index n = hermitian.rows();
  const ComplexMatrix half = Complex(0.0, 0.5 * step) * hermitian;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return (id - half).partialPivLu().solve(id + half);
}

}  // namespace entcorr
