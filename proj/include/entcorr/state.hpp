#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entcorr/linalg.hpp"

namespace entcorr {

/// Factorization d = d1 * d2 of a Hilbert-space dimension. Basis index of
/// |i1>|i2> is i1 * d2 + i2 (first factor major).
struct BipartiteSplit {
  std::size_t d1 = 1;
  std::size_t d2 = 1;

  BipartiteSplit() = default;
  BipartiteSplit(std::size_t first, std::size_t second);

  std::size_t dim() const { return d1 * d2; }
  /// d2 >= d1, the ordering assumed for the internal split of A.
  bool canonical() const { return d2 >= d1; }

  friend bool operator==(const BipartiteSplit&, const BipartiteSplit&) = default;
};

enum class Subsystem { first, second };

/// Probability vector of strictly positive components in non-increasing order.
/// Consumers treat missing trailing components as zeros.
class Spectrum {
 public:
  /// Validates sortedness, positivity and unit sum (tol::trace).
  explicit Spectrum(std::vector<double> components);

  /// Sorts, drops weights <= cutoff and renormalizes by the surviving sum.
  static Spectrum from_weights(std::span<const double> weights, double cutoff = 0.0);
  static Spectrum uniform(std::size_t n);
  static Spectrum point_mass() { return Spectrum({1.0}); }

  std::size_t size() const { return p_.size(); }
  /// Component i, zero past the end.
  double operator[](std::size_t i) const { return i < p_.size() ? p_[i] : 0.0; }
  std::span<const double> components() const { return p_; }

  /// Zero-padded copy of length n; throws DomainError if size() > n.
  std::vector<double> padded(std::size_t n) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<double> p_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates against tol::herm / tol::psd / tol::trace and stores the Hermitian part.
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix diagonal(std::span<const double> probabilities);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  struct Trusted {};
  DensityMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
  friend DensityMatrix trusted_density(ComplexMatrix m);

  ComplexMatrix m_;
};

/// Unit vector on a (possibly multipartite) space.
class PureState {
 public:
  /// Validates the norm against tol::norm.
  explicit PureState(ComplexVector amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(ComplexVector amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(psi_.size()); }
  const ComplexVector& amplitudes() const { return psi_; }

  DensityMatrix projector() const;

  /// Amplitudes reshaped to a d1 x d2 matrix (row = first-factor index).
  ComplexMatrix coefficient_matrix(const BipartiteSplit& split) const;

 private:
  ComplexVector psi_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);

/// Nonzero eigenvalues (> tol::zero), descending, renormalized to sum one.
Spectrum spectrum(const DensityMatrix& rho);

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSplit& split, Subsystem keep);

/// Reduced state of a pure state, computed from the coefficient matrix.
DensityMatrix reduced_state(const PureState& psi, const BipartiteSplit& split, Subsystem keep);

struct Purification {
  PureState state;       // on system (x) ancilla
  BipartiteSplit split;  // (system dim, ancilla dim)
};

/// Standard purification sum_m sqrt(mu_m) |m>|m~>. The ancilla dimension is the
/// rank of rho when rho is rank deficient, otherwise its full dimension.
Purification purify(const DensityMatrix& rho);

/// Purification into an ancilla of prescribed dimension (>= rank of rho).
PureState purify_into(const DensityMatrix& rho, std::size_t ancilla_dim);

/// Squared Schmidt coefficients of psi across the split.
Spectrum schmidt(const PureState& psi, const BipartiteSplit& split);

/// Classical-classical state sum_ij p_ij |i><i| (x) |j><j| from a dA x dB joint table.
DensityMatrix cc_state(const RealMatrix& joint);

/// sum_i p_i |i><i| (x) |i><i| on dA x dB.
DensityMatrix strictly_correlated_cc(const Spectrum& p, std::size_t dA, std::size_t dB);

/// Mixed maximally entangled state sum_i p_i |phi_i><phi_i| with
/// |phi_i> = sum_j |j>_1 |i*d1 + j>_2 / sqrt(d1). Throws CapacityError when
/// size(p) * d1 > d2.
DensityMatrix mems_state(const Spectrum& p, const BipartiteSplit& split);

// Validation bypass for matrices produced by exact constructions in this library.
DensityMatrix trusted_density(ComplexMatrix m);

}  // namespace entcorr
