#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "entcorr/correlations.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

enum class Sign { plus, minus };

/// w_pm(y) = -(1 +- sqrt(1 - y^2)) ln[(1 +- sqrt(1 - y^2)) / 2] / 2, y in [0, 1].
double w_pm(double y, Sign sign);

/// v(y) = w_+(y) + w_-(y): entanglement of formation of a two-qubit state with
/// concurrence y. Increasing from v(0) = 0 to v(1) = ln 2.
double v(double y);

/// Piecewise bound in the spectral deficit y = 1 - p1 of the top eigenvalue:
///   v(1 - y) on [0, 1/2],  v(2 - 3y) on [1/2, 2/3],  0 on [2/3, 3/4].
double u(double y);

/// Deficit y = 1 - p1 fixed by a correlation value x: x^2 - x^4/4 (Bures), x^2/2 (Hellinger).
double deficit_of_correlation(MonotoneKind kind, double x);

/// Tight bound on two-qubit entanglement of formation given a distance correlation
/// x in [0, c_max(kind, 4)]: u(deficit_of_correlation(kind, x)).
double xi_ef(MonotoneKind kind, double x);

/// Bound restricted to classical-classical global states. Only the Hellinger monotone
/// is supported, where it equals xi_ef(bures, x) on [0, 1].
double zeta_ef(MonotoneKind kind, double x);

/// zeta(x) = xi(2x) for the mutual information, x in [0, ln 4].
double zeta_mi_of_xi(const std::function<double(double)>& xi, double x);

/// Smallest correlation value where xi_ef(kind, .) reaches zero (deficit 2/3).
double threshold(MonotoneKind kind);

/// Deformation p -> p^(beta), beta >= 1, that moves p towards the point mass while
/// staying majorized-upward and continuous in beta.
///
/// Without a tie at the top, p_i^(beta) is proportional to (p_i / p_1)^beta. When
/// p_1 = ... = p_j, the top is first split linearly (p_1 + eta, the tied ones
/// p_1 - eta/(j-1)) for eta = beta - 1 up to eta*, the largest eta keeping the
/// order (tied ones meet p_{j+1}, zero padded); past that the power rule is applied
/// to the split vector with exponent beta - eta*.
Spectrum beta_deform(const Spectrum& p, double beta);

/// Largest eta keeping the linear tie-breaking split in descending order; 0 without a top tie.
double tie_split_limit(const Spectrum& p);

struct BetaSolution {
  double beta = 1.0;
  Spectrum p = Spectrum::point_mass();
  double value = 0.0;
};

/// Bisection on beta so that f(beta_deform(q, beta)) = target. Requires
/// f(q) >= target and f decreasing to f(point mass) along the family.
BetaSolution solve_beta(const Spectrum& q, const std::function<double(const Spectrum&)>& f, double target,
                        double tolerance = 1e-12);

struct GdResult {
  double value = 0.0;           // approximate infimum of s22_ef on the slice
  std::vector<double> argmin;   // 4 components, descending
};

/// Approximate inf { s22_ef(p) : p in E_4, f_kind(p) = x }.
///
/// Distance kinds: p1 = 1 - y(x) is fixed, so the search runs over (p2, p4) on a
/// grid_resolution^2 grid clipped to the ordering constraints, then a pattern search
/// around the best cell. Mutual information: grid over (p3, p4) with p1 found by
/// bisection on the entropy constraint h(p) = x/2, then the same refinement.
/// Only d = 4 is supported.
GdResult g_d_search(MonotoneKind kind, std::size_t d, double x, int grid_resolution = 200);
double g_d_numeric(MonotoneKind kind, std::size_t d, double x, int grid_resolution = 200);

/// ln(d1 d2) - alpha / (2 d (d - 1)) with d = d1 d2: past this Renyi-entropy value
/// every spectrum lies in the separable ball.
double renyi_threshold(std::size_t d1, std::size_t d2, double alpha);

struct CurvePoint {
  double x = 0.0;
  double bound = 0.0;
};

struct BoundCurve {
  MonotoneKind kind = MonotoneKind::hellinger;
  std::vector<CurvePoint> samples;
};

/// Equally spaced grid of `points` values on [0, upper], endpoints included.
std::vector<double> linear_grid(double upper, std::size_t points);

BoundCurve xi_curve(MonotoneKind kind, std::size_t points);
BoundCurve zeta_curve(MonotoneKind kind, std::size_t points);

/// Tabulated xi for the mutual information, ln 2 - g_4(x) on [0, 2 ln 4]. Between
/// nodes the left node is returned: xi is non-increasing, so this never undercuts it.
class MutualInformationXi {
 public:
  explicit MutualInformationXi(std::size_t nodes = 1025, int grid_resolution = 60);
  double operator()(double x) const;
  double upper() const { return upper_; }

 private:
  double upper_;
  std::vector<double> values_;
};

}  // namespace entcorr
