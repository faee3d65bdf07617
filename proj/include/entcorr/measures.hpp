#pragma once

#include <cstddef>

#include "entcorr/rng.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

enum class MeasureTag { entanglement_of_formation, negativity };

struct EntanglementResult {
  double value = 0.0;  // nats for entanglement of formation, dimensionless for negativity
  MeasureTag measure = MeasureTag::entanglement_of_formation;
};

/// Two-qubit concurrence max{0, mu1 - mu2 - mu3 - mu4}, mu the descending square roots
/// of the eigenvalues of sqrt(rho) (Y(x)Y) rho* (Y(x)Y) sqrt(rho).
double concurrence(const DensityMatrix& rho);

/// Entanglement of formation of a two-qubit state, v(concurrence), in nats.
double entanglement_of_formation(const DensityMatrix& rho);

/// (||rho^{T_1}||_1 - 1) / 2.
double negativity(const DensityMatrix& rho, const BipartiteSplit& split);

/// Dispatch by tag. Entanglement of formation requires split (2, 2).
EntanglementResult entanglement(MeasureTag measure, const DensityMatrix& rho, const BipartiteSplit& split);

/// max{0, p1 - p3 - 2 sqrt(p2 p4)}: the largest concurrence on the unitary orbit of diag(p).
double max_orbit_concurrence(const Spectrum& p);

/// ln 2 - v(max_orbit_concurrence(p)). Throws DomainError for more than four components.
double s22_ef(const Spectrum& p);

/// Two-qubit state with spectrum p reaching entanglement of formation ln 2 - s22_ef(p).
///
/// Eigenbasis, paired with p1..p4 in that order:
///   (|00> + |11>)/sqrt 2,  |01>,  (|00> - |11>)/sqrt 2,  |10>.
/// The result is an X state whose concurrence is 2 max{0, (p1 - p3)/2 - sqrt(p2 p4)}.
DensityMatrix max_ef_state(const Spectrum& p);

struct OrbitSearchOptions {
  int restarts = 20;
  int iterations = 2000;  // per restart
  double initial_step = 0.1;
  double min_step = 1e-10;  // a restart ends early once the step size falls below this
};

struct OrbitSearchResult {
  double entanglement = 0.0;  // v(concurrence), nats
  double concurrence = 0.0;
  ComplexMatrix unitary;      // best U, state = U diag(p) U^dagger
};

/// Random-restart local search over U(4) for the most entangled state with spectrum p.
/// Each step multiplies U by the Cayley transform of a random Hermitian direction and
/// keeps it only if mu1 - mu2 - mu3 - mu4 improves. Directions come from a Gaussian whose
/// covariance and scale adapt to the success history ((1+1)-CMA-ES).
OrbitSearchResult max_ef_over_orbit(const Spectrum& p, const OrbitSearchOptions& options, Rng& rng);

double max_ef_over_spectrum_numeric(const Spectrum& p, const OrbitSearchOptions& options, Rng& rng);

/// Purity of p at most 1/(d-1): every state on a d-dimensional bipartite space with
/// this spectrum is separable.
bool is_zhsl_separable(const Spectrum& p, std::size_t d);

/// p1 <= p_{2d-1} + 2 sqrt(p_{2d-2} p_{2d}) (1-based, zero padded): every 2 x d state
/// with this spectrum is separable.
bool is_abs_separable_2xd(const Spectrum& p, std::size_t d);

/// Average entanglement entropy of the eigen-ensemble of rho, an upper bound on the
/// entanglement of formation for any split.
double ef_decomposition_upper_bound(const DensityMatrix& rho, const BipartiteSplit& split);

/// Local channel on the second factor folding the basis |i*d1 + j> onto |j> for every
/// complete block i (leftover basis states map to |0>). Result lives on d1 x d1.
DensityMatrix fold_second_factor(const DensityMatrix& rho, const BipartiteSplit& split);

}  // namespace entcorr
