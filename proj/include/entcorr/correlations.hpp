#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "entcorr/rng.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

enum class MonotoneKind { mutual_information, bures, hellinger };

std::string_view to_string(MonotoneKind kind);
std::optional<MonotoneKind> parse_monotone_kind(std::string_view name);

/// sqrt(2 (1 - sqrt p1)): Bures correlation of a pure state with Schmidt spectrum p.
double f_db(const Spectrum& p);
/// sqrt(2 (1 - p1)): Hellinger correlation of a pure state with Schmidt spectrum p.
double f_dh(const Spectrum& p);
/// 2 h(p): mutual information of a pure state with Schmidt spectrum p.
double f_mi(const Spectrum& p);

/// Pure-state correlation function of the given monotone.
double f_kind(MonotoneKind kind, const Spectrum& p);

/// Correlation of the strictly correlated classical-classical state with spectrum p:
/// h for mutual information, f_db for both distance monotones.
double f_tilde(MonotoneKind kind, const Spectrum& p);

/// f_kind at the uniform spectrum on d outcomes, the largest value on d outcomes.
double c_max(MonotoneKind kind, std::size_t d);

/// S(rho_A) + S(rho_B) - S(rho) in nats.
double mutual_information(const DensityMatrix& rho, const BipartiteSplit& split);

/// Exact correlation of a pure state: f_kind of its Schmidt spectrum.
double c_on_pure(const PureState& psi, const BipartiteSplit& split, MonotoneKind kind);

struct AlternatingOptions {
  int restarts = 10;
  int outer = 5;      // alternations between the two factors
  int inner = 500;    // local-search steps per factor per alternation
  double initial_step = 0.1;
  int patience = 50;
  double decay = 0.5;
};

/// Upper estimate of inf_{dA, dB} D(rho, dA (x) dB) for the Bures or Hellinger distance.
///
/// Alternating maximization of the overlap over the two factors. The first restart starts
/// from the marginals, the rest from random factors. Where the overlap is linear in one
/// factor (Hellinger, using sqrt(dX); Bures on pure states) each half-step is the exact
/// maximizer, iterated to a fixed point within outer * inner rounds. Otherwise (Bures on
/// mixed states) each factor is a square complex matrix L with dX = L L^dagger / tr and
/// is improved by accept-if-improve local search.
/// Throws DomainError for mutual_information or for dimensions above 64.
double c_distance_numeric(const DensityMatrix& rho, const BipartiteSplit& split, MonotoneKind kind,
                          const AlternatingOptions& options, Rng& rng);

}  // namespace entcorr
