#include "entcorr/state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "entcorr/error.hpp"
#include "entcorr/tolerance.hpp"

namespace entcorr {

BipartiteSplit::BipartiteSplit(std::size_t first, std::size_t second) : d1(first), d2(second) {
  if (d1 == 0 || d2 == 0) throw DomainError("BipartiteSplit: factor dimensions must be positive");
}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum::Spectrum(std::vector<double> components) : p_(std::move(components)) {
  if (p_.empty()) throw DomainError("Spectrum: empty probability vector");
  double sum = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] > 0.0) || !std::isfinite(p_[i])) throw DomainError("Spectrum: components must be positive and finite");
    if (i > 0 && p_[i] > p_[i - 1]) throw DomainError("Spectrum: components must be non-increasing");
    sum += p_[i];
  }
  if (std::abs(sum - 1.0) > tol::trace) throw DomainError("Spectrum: components sum to " + std::to_string(sum));
}

Spectrum Spectrum::from_weights(std::span<const double> weights, double cutoff) {
  std::vector<double> kept;
  for (double w : weights) {
    if (!std::isfinite(w)) throw DomainError("Spectrum::from_weights: non-finite weight");
    if (w > cutoff) kept.push_back(w);
  }
  if (kept.empty()) throw DomainError("Spectrum::from_weights: no weight above cutoff");
  std::sort(kept.begin(), kept.end(), std::greater<>());
  const double total = std::accumulate(kept.begin(), kept.end(), 0.0);
  for (double& w : kept) w /= total;
  return Spectrum(std::move(kept));
}

Spectrum Spectrum::uniform(std::size_t n) {
  if (n == 0) throw DomainError("Spectrum::uniform: size must be positive");
  return Spectrum(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::vector<double> Spectrum::padded(std::size_t n) const {
  if (p_.size() > n) {
    throw DomainError("Spectrum::padded: " + std::to_string(p_.size()) + " components do not fit in " + std::to_string(n));
  }
  std::vector<double> out(p_);
  out.resize(n, 0.0);
  return out;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DomainError("DensityMatrix: matrix must be square and non-empty");
  const HermitianEig eig = hermitian_eig(m);  // checks Hermiticity
  if (eig.values.minCoeff() < -tol::psd) {
    throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(eig.values.minCoeff()));
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol::trace) throw DomainError("DensityMatrix: trace is " + std::to_string(tr));
  m_ = 0.5 * (m + m.adjoint());
}

DensityMatrix trusted_density(ComplexMatrix m) {
  ComplexMatrix herm = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(herm), DensityMatrix::Trusted{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DomainError("maximally_mixed: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return trusted_density(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  const auto n = static_cast<Eigen::Index>(probabilities.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = probabilities[static_cast<std::size_t>(i)];
  return DensityMatrix(m);
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(ComplexVector amplitudes) : psi_(std::move(amplitudes)) {
  if (psi_.size() == 0) throw DomainError("PureState: empty amplitude vector");
  if (!psi_.allFinite()) throw DomainError("PureState: non-finite amplitude");
  const double n2 = psi_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol::norm) throw DomainError("PureState: squared norm is " + std::to_string(n2));
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw DomainError("PureState::normalized: zero vector");
  return PureState(amplitudes / n);
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix PureState::projector() const { return trusted_density(psi_ * psi_.adjoint()); }

ComplexMatrix PureState::coefficient_matrix(const BipartiteSplit& split) const {
  if (split.dim() != dim()) {
    throw DomainError("coefficient_matrix: state dimension " + std::to_string(dim()) + " does not match split " +
                      std::to_string(split.d1) + "x" + std::to_string(split.d2));
  }
  const auto d1 = static_cast<Eigen::Index>(split.d1);
  const auto d2 = static_cast<Eigen::Index>(split.d2);
  ComplexMatrix c(d1, d2);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j) c(i, j) = psi_(i * d2 + j);
  return c;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return trusted_density(kron(a.matrix(), b.matrix()));
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState::normalized(kron(a.amplitudes(), b.amplitudes()));
}

// ---------------------------------------------------------------------------
// Operations

Spectrum spectrum(const DensityMatrix& rho) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  return Spectrum::from_weights(std::span<const double>(eig.values.data(), static_cast<std::size_t>(eig.values.size())),
                                tol::zero);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSplit& split, Subsystem keep) {
  if (rho.dim() != split.dim()) {
    throw DomainError("partial_trace: state dimension " + std::to_string(rho.dim()) + " does not match split " +
                      std::to_string(split.d1) + "x" + std::to_string(split.d2));
  }
  const auto d1 = static_cast<Eigen::Index>(split.d1);
  const auto d2 = static_cast<Eigen::Index>(split.d2);
  const ComplexMatrix& m = rho.matrix();
  if (keep == Subsystem::first) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index k = 0; k < d1; ++k)
        for (Eigen::Index j = 0; j < d2; ++j) out(i, k) += m(i * d2 + j, k * d2 + j);
    return trusted_density(std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index j = 0; j < d2; ++j)
    for (Eigen::Index l = 0; l < d2; ++l)
      for (Eigen::Index i = 0; i < d1; ++i) out(j, l) += m(i * d2 + j, i * d2 + l);
  return trusted_density(std::move(out));
}

DensityMatrix reduced_state(const PureState& psi, const BipartiteSplit& split, Subsystem keep) {
  const ComplexMatrix c = psi.coefficient_matrix(split);
  if (keep == Subsystem::first) return trusted_density(c * c.adjoint());
  return trusted_density((c.adjoint() * c).transpose());
}

PureState purify_into(const DensityMatrix& rho, std::size_t ancilla_dim) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  const auto n = static_cast<Eigen::Index>(rho.dim());
  const auto na = static_cast<Eigen::Index>(ancilla_dim);
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < n; ++k)
    if (eig.values(k) > tol::zero) ++rank;
  if (na < rank) {
    throw CapacityError("purify_into: ancilla dimension " + std::to_string(ancilla_dim) + " below rank " +
                        std::to_string(rank));
  }
  ComplexVector psi = ComplexVector::Zero(n * na);
  for (Eigen::Index m = 0; m < rank; ++m) {
    const double amp = std::sqrt(eig.values(m));
    for (Eigen::Index i = 0; i < n; ++i) psi(i * na + m) += amp * eig.vectors(i, m);
  }
  return PureState::normalized(std::move(psi));
}

Purification purify(const DensityMatrix& rho) {
  const Spectrum s = spectrum(rho);
  const std::size_t ancilla = s.size() < rho.dim() ? s.size() : rho.dim();
  return Purification{purify_into(rho, ancilla), BipartiteSplit(rho.dim(), ancilla)};
}

Spectrum schmidt(const PureState& psi, const BipartiteSplit& split) {
  const ComplexMatrix c = psi.coefficient_matrix(split);
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  const RealVector& sv = svd.singularValues();
  std::vector<double> w(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index k = 0; k < sv.size(); ++k) w[static_cast<std::size_t>(k)] = sv(k) * sv(k);
  return Spectrum::from_weights(w, tol::zero);
}

DensityMatrix cc_state(const RealMatrix& joint) {
  if (joint.size() == 0) throw DomainError("cc_state: empty joint distribution");
  if ((joint.array() < 0.0).any()) throw DomainError("cc_state: negative joint probability");
  if (std::abs(joint.sum() - 1.0) > tol::trace) throw DomainError("cc_state: joint probabilities must sum to one");
  const Eigen::Index da = joint.rows();
  const Eigen::Index db = joint.cols();
  ComplexMatrix m = ComplexMatrix::Zero(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < db; ++j) m(i * db + j, i * db + j) = joint(i, j);
  return trusted_density(std::move(m));
}

DensityMatrix strictly_correlated_cc(const Spectrum& p, std::size_t dA, std::size_t dB) {
  if (p.size() > std::min(dA, dB)) {
    throw CapacityError("strictly_correlated_cc: " + std::to_string(p.size()) + " outcomes need dA, dB >= that");
  }
  RealMatrix joint = RealMatrix::Zero(static_cast<Eigen::Index>(dA), static_cast<Eigen::Index>(dB));
  for (std::size_t i = 0; i < p.size(); ++i) joint(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = p[i];
  return cc_state(joint);
}

DensityMatrix mems_state(const Spectrum& p, const BipartiteSplit& split) {
  if (p.size() * split.d1 > split.d2) {
    throw CapacityError("mems_state: " + std::to_string(p.size()) + " maximally entangled blocks of width " +
                        std::to_string(split.d1) + " do not fit in d2 = " + std::to_string(split.d2));
  }
  const auto d1 = static_cast<Eigen::Index>(split.d1);
  const auto d2 = static_cast<Eigen::Index>(split.d2);
  ComplexMatrix m = ComplexMatrix::Zero(d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    ComplexVector phi = ComplexVector::Zero(d1 * d2);
    for (Eigen::Index j = 0; j < d1; ++j) {
      const Eigen::Index second = static_cast<Eigen::Index>(i) * d1 + j;
      phi(j * d2 + second) = 1.0 / std::sqrt(static_cast<double>(d1));
    }
    m += p[i] * phi * phi.adjoint();
  }
  return trusted_density(std::move(m));
}

}  // namespace entcorr
