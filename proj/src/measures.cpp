#include "entcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "entcorr/bounds.hpp"
#include "entcorr/entropy.hpp"
#include "entcorr/error.hpp"
#include "entcorr/sampling.hpp"
#include "entcorr/tolerance.hpp"

namespace entcorr {

namespace {

const ComplexMatrix& spin_flip() {
  static const ComplexMatrix yy = [] {
    ComplexMatrix y(2, 2);
    y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return kron(y, y);
  }();
  return yy;
}

void require_two_qubits(const ComplexMatrix& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) throw DomainError(std::string(what) + ": expects a 4x4 two-qubit state");
}

// mu1 - mu2 - mu3 - mu4 from a precomputed square root of rho; the concurrence is its
// positive part. The unclamped value still ranks separable states, which the orbit
// search needs to climb out of the region where the concurrence is flat zero.
double concurrence_margin(const ComplexMatrix& root, const ComplexMatrix& rho) {
  const ComplexMatrix& yy = spin_flip();
  const ComplexMatrix flipped = yy * rho.conjugate() * yy;
  ComplexMatrix r = root * flipped * root;
  r = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(r, Eigen::EigenvaluesOnly);
  const RealVector& ev = solver.eigenvalues();  // ascending
  const double floor = eigen_noise_floor(ev);
  double mu[4];
  for (int k = 0; k < 4; ++k) mu[k] = ev(3 - k) > floor ? std::sqrt(ev(3 - k)) : 0.0;
  return mu[0] - mu[1] - mu[2] - mu[3];
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho.matrix(), "concurrence");
  return std::max(0.0, concurrence_margin(matrix_sqrt_psd(rho.matrix()), rho.matrix()));
}

double entanglement_of_formation(const DensityMatrix& rho) { return v(std::min(1.0, concurrence(rho))); }

double negativity(const DensityMatrix& rho, const BipartiteSplit& split) {
  if (rho.dim() != split.dim()) throw DomainError("negativity: state dimension does not match split");
  const auto d1 = static_cast<Eigen::Index>(split.d1);
  const auto d2 = static_cast<Eigen::Index>(split.d2);
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix pt(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k)
        for (Eigen::Index l = 0; l < d2; ++l) pt(i * d2 + j, k * d2 + l) = m(k * d2 + j, i * d2 + l);
  const HermitianEig eig = hermitian_eig(pt);
  double negative = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (eig.values(k) < 0.0) negative -= eig.values(k);
  return negative;
}

EntanglementResult entanglement(MeasureTag measure, const DensityMatrix& rho, const BipartiteSplit& split) {
  switch (measure) {
    case MeasureTag::entanglement_of_formation:
      if (split != BipartiteSplit(2, 2)) throw DomainError("entanglement: formation is only available for 2x2");
      return {entanglement_of_formation(rho), measure};
    case MeasureTag::negativity:
      return {negativity(rho, split), measure};
  }
  throw DomainError("entanglement: unknown measure");
}

double max_orbit_concurrence(const Spectrum& p) {
  const std::vector<double> q = p.padded(4);
  return std::max(0.0, q[0] - q[2] - 2.0 * std::sqrt(q[1] * q[3]));
}

double s22_ef(const Spectrum& p) { return std::log(2.0) - v(std::min(1.0, max_orbit_concurrence(p))); }

DensityMatrix max_ef_state(const Spectrum& p) {
  const std::vector<double> q = p.padded(4);
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix basis = ComplexMatrix::Zero(4, 4);
  basis(0, 0) = r;  // (|00> + |11>)/sqrt 2
  basis(3, 0) = r;
  basis(1, 1) = 1.0;  // |01>
  basis(0, 2) = r;  // (|00> - |11>)/sqrt 2
  basis(3, 2) = -r;
  basis(2, 3) = 1.0;  // |10>
  RealVector weights(4);
  for (int k = 0; k < 4; ++k) weights(k) = q[static_cast<std::size_t>(k)];
  DensityMatrix rho = trusted_density(basis * weights.cast<Complex>().asDiagonal() * basis.adjoint());

  const std::vector<double> check = spectrum(rho).padded(4);
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(check[k] - q[k]) > tol::num) throw InternalError("max_ef_state: spectrum mismatch");
  }
  return rho;
}

namespace {

// Orthonormal (Frobenius) basis of the traceless Hermitian 4x4 matrices.
const std::vector<ComplexMatrix>& traceless_basis() {
  static const std::vector<ComplexMatrix> basis = [] {
    std::vector<ComplexMatrix> out;
    const double r = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        ComplexMatrix sym = ComplexMatrix::Zero(4, 4);
        sym(j, k) = sym(k, j) = r;
        ComplexMatrix anti = ComplexMatrix::Zero(4, 4);
        anti(j, k) = Complex(0.0, -r);
        anti(k, j) = Complex(0.0, r);
        out.push_back(sym);
        out.push_back(anti);
      }
    }
    for (int l = 1; l < 4; ++l) {
      ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
      const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
      for (int m = 0; m < l; ++m) diag(m, m) = norm;
      diag(l, l) = -l * norm;
      out.push_back(diag);
    }
    return out;
  }();
  return basis;
}

}  // namespace

OrbitSearchResult max_ef_over_orbit(const Spectrum& p, const OrbitSearchOptions& options, Rng& rng) {
  const std::vector<double> q = p.padded(4);
  RealVector diag(4), root_diag(4);
  for (int k = 0; k < 4; ++k) {
    diag(k) = q[static_cast<std::size_t>(k)];
    root_diag(k) = std::sqrt(diag(k));
  }
  const auto objective = [&](const ComplexMatrix& unitary) {
    const ComplexMatrix rho = unitary * diag.cast<Complex>().asDiagonal() * unitary.adjoint();
    const ComplexMatrix root = unitary * root_diag.cast<Complex>().asDiagonal() * unitary.adjoint();
    return concurrence_margin(root, rho);
  };

  // (1+1)-CMA-ES on the Lie algebra (Igel, Suttorp & Hansen 2006). The objective has
  // cusps along ridges at the optimum, where isotropic steps almost never improve;
  // the adapted covariance learns the ridge direction.
  const std::vector<ComplexMatrix>& basis = traceless_basis();
  const int n = static_cast<int>(basis.size());
  const double damping = 1.0 + n / 2.0;
  const double p_target = 2.0 / 11.0;
  const double c_p = p_target / (2.0 + p_target);
  const double c_c = 2.0 / (n + 2.0);
  const double c_cov = 2.0 / (n * n + 6.0);
  const double p_thresh = 0.44;
  std::normal_distribution<double> gauss(0.0, 1.0);

  const std::uint64_t base = rng();
  double best_margin = -std::numeric_limits<double>::infinity();
  OrbitSearchResult best{0.0, 0.0, ComplexMatrix::Identity(4, 4)};
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    Rng stream = Rng::stream(base, static_cast<std::uint64_t>(restart));
    // The second half of the restarts polishes the incumbent with a fresh step size
    // and covariance, which gets it past points where the adaptation stalled.
    const bool polish = restart >= (options.restarts + 1) / 2 && restart > 0;
    ComplexMatrix unitary = polish ? best.unitary : haar_unitary(4, stream);
    double value = objective(unitary);
    double sigma = options.initial_step;
    double p_succ = p_target;
    RealMatrix cov = RealMatrix::Identity(n, n);
    RealMatrix chol = cov;
    RealVector path = RealVector::Zero(n);
    for (int it = 0; it < options.iterations && sigma > options.min_step; ++it) {
      RealVector z(n);
      for (int k = 0; k < n; ++k) z(k) = gauss(stream);
      const RealVector y = chol * z;
      ComplexMatrix h = ComplexMatrix::Zero(4, 4);
      for (int k = 0; k < n; ++k) h += y(k) * basis[static_cast<std::size_t>(k)];
      const ComplexMatrix trial = cayley_unitary(h, sigma) * unitary;
      const double trial_value = objective(trial);
      const bool success = trial_value > value;
      p_succ = (1.0 - c_p) * p_succ + c_p * (success ? 1.0 : 0.0);
      sigma *= std::exp((p_succ - p_target) / (damping * (1.0 - p_target)));
      if (!success) continue;
      value = trial_value;
      unitary = trial;
      if (p_succ < p_thresh) {
        path = (1.0 - c_c) * path + std::sqrt(c_c * (2.0 - c_c)) * y;
        cov = (1.0 - c_cov) * cov + c_cov * path * path.transpose();
      } else {
        path = (1.0 - c_c) * path;
        cov = (1.0 - c_cov) * cov + c_cov * (path * path.transpose() + c_c * (2.0 - c_c) * cov);
      }
      const Eigen::LLT<RealMatrix> llt(cov);
      if (llt.info() == Eigen::Success) chol = llt.matrixL();
    }
    if (value > best_margin) {
      best_margin = value;
      best.unitary = unitary;
    }
  }
  best.concurrence = std::max(0.0, best_margin);
  best.entanglement = v(std::min(1.0, best.concurrence));
  return best;
}

double max_ef_over_spectrum_numeric(const Spectrum& p, const OrbitSearchOptions& options, Rng& rng) {
  return max_ef_over_orbit(p, options, rng).entanglement;
}

bool is_zhsl_separable(const Spectrum& p, std::size_t d) {
  if (d < 2) throw DomainError("is_zhsl_separable: dimension must be at least 2");
  (void)p.padded(d);
  return purity(p) <= 1.0 / static_cast<double>(d - 1);
}

bool is_abs_separable_2xd(const Spectrum& p, std::size_t d) {
  if (d < 2) throw DomainError("is_abs_separable_2xd: d must be at least 2");
  const std::vector<double> q = p.padded(2 * d);
  // 1-based p_{2d-1}, p_{2d-2}, p_{2d}
  const double lhs = q[0];
  const double rhs = q[2 * d - 2] + 2.0 * std::sqrt(q[2 * d - 3] * q[2 * d - 1]);
  return lhs <= rhs;
}

double ef_decomposition_upper_bound(const DensityMatrix& rho, const BipartiteSplit& split) {
  if (rho.dim() != split.dim()) throw DomainError("ef_decomposition_upper_bound: dimension mismatch");
  const HermitianEig eig = hermitian_eig(rho.matrix());
  double total = 0.0;
  for (Eigen::Index m = 0; m < eig.values.size(); ++m) {
    if (eig.values(m) <= tol::zero) continue;
    const PureState member = PureState::normalized(eig.vectors.col(m));
    total += eig.values(m) * shannon_entropy(schmidt(member, split));
  }
  return total;
}

DensityMatrix fold_second_factor(const DensityMatrix& rho, const BipartiteSplit& split) {
  if (rho.dim() != split.dim()) throw DomainError("fold_second_factor: dimension mismatch");
  const auto d1 = static_cast<Eigen::Index>(split.d1);
  const auto d2 = static_cast<Eigen::Index>(split.d2);
  const Eigen::Index blocks = d2 / d1;
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index i = 0; i < blocks; ++i) {
    ComplexMatrix k = ComplexMatrix::Zero(d1, d2);
    for (Eigen::Index j = 0; j < d1; ++j) k(j, i * d1 + j) = 1.0;
    kraus.push_back(std::move(k));
  }
  for (Eigen::Index rest = blocks * d1; rest < d2; ++rest) {
    ComplexMatrix k = ComplexMatrix::Zero(d1, d2);
    k(0, rest) = 1.0;
    kraus.push_back(std::move(k));
  }
  const ComplexMatrix id1 = ComplexMatrix::Identity(d1, d1);
  ComplexMatrix out = ComplexMatrix::Zero(d1 * d1, d1 * d1);
  for (const ComplexMatrix& k : kraus) {
    const ComplexMatrix full = kron(id1, k);
    out += full * rho.matrix() * full.adjoint();
  }
  return trusted_density(std::move(out));
}

}  // namespace entcorr
