#include "entcorr/sampling.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "entcorr/error.hpp"

namespace entcorr {

ComplexVector complex_gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

ComplexMatrix complex_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

PureState haar_pure(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DomainError("haar_pure: dimension must be positive");
  if (dim == 1) return PureState::basis(1, 0);
  return PureState::normalized(complex_gaussian_vector(dim, rng));
}

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DomainError("haar_unitary: dimension must be positive");
  const ComplexMatrix g = complex_gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

DensityMatrix random_density(std::size_t dim, std::size_t ancilla_dim, Rng& rng) {
  if (dim == 0 || ancilla_dim == 0) throw DomainError("random_density: dimensions must be positive");
  const PureState psi = haar_pure(dim * ancilla_dim, rng);
  return reduced_state(psi, BipartiteSplit(dim, ancilla_dim), Subsystem::first);
}

Spectrum random_spectrum(std::size_t size, Rng& rng) {
  if (size == 0) throw DomainError("random_spectrum: size must be positive");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(size);
  for (double& x : w) {
    do {
      x = expo(rng);
    } while (!(x > 0.0));
  }
  return Spectrum::from_weights(w);
}

ComplexMatrix random_hermitian_direction(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = complex_gaussian_matrix(dim, dim, rng);
  ComplexMatrix h = 0.5 * (g + g.adjoint());
  return h / h.norm();
}

}  // namespace entcorr
