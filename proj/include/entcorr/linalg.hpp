#pragma once

#include <complex>

#include <Eigen/Dense>

namespace entcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

struct HermitianEig {
  RealVector values;     // descending
  ComplexMatrix vectors; // columns are the matching orthonormal eigenvectors
};

/// Largest deviation |M - M^dagger| over all entries.
double hermiticity_error(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Throws DomainError when the input is not square or not Hermitian within tol::herm.
/// Degenerate eigenspaces come back with an arbitrary orthonormal basis.
HermitianEig hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues at or below this magnitude are indistinguishable from rounding noise
/// of the eigensolver (a few ulps of the largest eigenvalue).
double eigen_noise_floor(const RealVector& values);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-tol::psd, noise floor] are treated as zero; anything more negative throws.
/// Zeroing the floor matters: sqrt turns 1e-17 of noise into 3e-9.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Cayley map of a Hermitian generator; always unitary.
ComplexMatrix cayley_unitary(const ComplexMatrix& hermitian, double step);

}  // namespace entcorr
