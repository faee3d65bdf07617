#include "entcorr/distance.hpp"

#include <algorithm>
#include <cmath>

#include "entcorr/error.hpp"
#include "entcorr/tolerance.hpp"

namespace entcorr {

namespace {

void check_pair(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) throw DomainError("distance: dimension mismatch");
}

double trace_sqrt_psd(const ComplexMatrix& m) {
  const HermitianEig eig = hermitian_eig(m);
  const double floor = eigen_noise_floor(eig.values);
  double s = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values(k);
    if (lambda < -tol::psd) throw DomainError("distance: operator is not positive semidefinite");
    if (lambda > floor) s += std::sqrt(lambda);
  }
  return s;
}

}  // namespace

double distance_from_overlap(double overlap) { return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap)); }

double root_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  check_pair(rho, sigma);
  const ComplexMatrix r = matrix_sqrt_psd(rho);
  (void)matrix_sqrt_psd(sigma);  // positivity check on the second argument
  ComplexMatrix inner = r * sigma * r;
  inner = 0.5 * (inner + inner.adjoint());
  return std::min(1.0, trace_sqrt_psd(inner));
}

double affinity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  check_pair(rho, sigma);
  const ComplexMatrix a = matrix_sqrt_psd(rho);
  const ComplexMatrix b = matrix_sqrt_psd(sigma);
  return std::min(1.0, (a * b).trace().real());
}

double bures_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return distance_from_overlap(root_fidelity(rho, sigma));
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return bures_distance(rho.matrix(), sigma.matrix());
}

double hellinger_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return distance_from_overlap(affinity(rho, sigma));
}

double hellinger_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return hellinger_distance(rho.matrix(), sigma.matrix());
}

}  // namespace entcorr
