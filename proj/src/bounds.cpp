#include "entcorr/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "entcorr/entropy.hpp"
#include "entcorr/error.hpp"
#include "entcorr/measures.hpp"

namespace entcorr {

namespace {

constexpr double kEdge = 1e-12;  // slack on closed-interval domain checks

double clamp_domain(double value, double lo, double hi, const char* what) {
  if (!std::isfinite(value) || value < lo - kEdge || value > hi + kEdge) {
    throw DomainError(std::string(what) + ": argument " + std::to_string(value) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
  return std::clamp(value, lo, hi);
}

double log2_nats() { return std::log(2.0); }

}  // namespace

double w_pm(double y, Sign sign) {
  y = clamp_domain(y, 0.0, 1.0, "w_pm");
  const double root = std::sqrt(std::max(0.0, 1.0 - y * y));
  const double a = sign == Sign::plus ? 1.0 + root : 1.0 - root;
  if (a <= 0.0) return 0.0;
  return -a * std::log(a / 2.0) / 2.0;
}

double v(double y) { return w_pm(y, Sign::plus) + w_pm(y, Sign::minus); }

double u(double y) {
  y = clamp_domain(y, 0.0, 0.75, "u");
  if (y <= 0.5) return v(1.0 - y);
  if (y <= 2.0 / 3.0) return v(std::clamp(2.0 - 3.0 * y, 0.0, 1.0));
  return 0.0;
}

double deficit_of_correlation(MonotoneKind kind, double x) {
  switch (kind) {
    case MonotoneKind::bures:
      return x * x - x * x * x * x / 4.0;
    case MonotoneKind::hellinger:
      return x * x / 2.0;
    case MonotoneKind::mutual_information:
      break;
  }
  throw DomainError("deficit_of_correlation: the mutual information does not fix the top eigenvalue");
}

double xi_ef(MonotoneKind kind, double x) {
  if (kind == MonotoneKind::mutual_information) {
    throw DomainError("xi_ef: no closed form for the mutual information; use MutualInformationXi");
  }
  x = clamp_domain(x, 0.0, c_max(kind, 4), "xi_ef");
  return u(std::min(0.75, deficit_of_correlation(kind, x)));
}

double zeta_ef(MonotoneKind kind, double x) {
  if (kind != MonotoneKind::hellinger) throw DomainError("zeta_ef: only the Hellinger monotone is supported");
  x = clamp_domain(x, 0.0, f_tilde(kind, Spectrum::uniform(4)), "zeta_ef");
  return xi_ef(MonotoneKind::bures, x);
}

double zeta_mi_of_xi(const std::function<double(double)>& xi, double x) {
  x = clamp_domain(x, 0.0, std::log(4.0), "zeta_mi_of_xi");
  return xi(2.0 * x);
}

double threshold(MonotoneKind kind) {
  switch (kind) {
    case MonotoneKind::hellinger:
      return std::sqrt(4.0 / 3.0);  // x^2 / 2 = 2/3
    case MonotoneKind::bures:
      return std::sqrt(2.0 - std::sqrt(4.0 / 3.0));  // lower root of t - t^2/4 = 2/3, t = x^2
    case MonotoneKind::mutual_information:
      break;
  }
  throw DomainError("threshold: only the Bures and Hellinger monotones have a closed-form threshold");
}

// ---------------------------------------------------------------------------
// beta family

double tie_split_limit(const Spectrum& p) {
  std::size_t tied = 1;
  while (tied < p.size() && p[tied] == p[0]) ++tied;
  if (tied == 1) return 0.0;
  return static_cast<double>(tied - 1) * (p[0] - p[tied]);  // p[tied] is zero past the end
}

namespace {

Spectrum power_rule(std::span<const double> q, double exponent) {
  std::vector<double> w(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) w[i] = q[i] > 0.0 ? std::pow(q[i] / q[0], exponent) : 0.0;
  return Spectrum::from_weights(w);
}

std::vector<double> tie_split(const Spectrum& p, double eta) {
  std::size_t tied = 1;
  while (tied < p.size() && p[tied] == p[0]) ++tied;
  std::vector<double> q(p.components().begin(), p.components().end());
  q[0] = p[0] + eta;
  for (std::size_t i = 1; i < tied; ++i) q[i] = std::max(0.0, p[0] - eta / static_cast<double>(tied - 1));
  return q;
}

}  // namespace

Spectrum beta_deform(const Spectrum& p, double beta) {
  if (!(beta >= 1.0) || std::isnan(beta)) throw DomainError("beta_deform: beta must be at least 1");
  if (p.size() == 1 || beta == 1.0) return p;
  const double eta_star = tie_split_limit(p);
  if (eta_star == 0.0) return power_rule(p.components(), beta);
  const double eta = beta - 1.0;
  if (eta <= eta_star) return Spectrum::from_weights(tie_split(p, eta));
  const std::vector<double> split = tie_split(p, eta_star);
  return power_rule(split, beta - eta_star);
}

BetaSolution solve_beta(const Spectrum& q, const std::function<double(const Spectrum&)>& f, double target,
                        double tolerance) {
  const double start = f(q);
  if (target > start + tolerance) throw DomainError("solve_beta: target above f(q)");
  if (std::abs(start - target) <= tolerance) return {1.0, q, start};

  double lo = 1.0;
  double hi = 2.0;
  Spectrum p_hi = beta_deform(q, hi);
  double f_hi = f(p_hi);
  while (f_hi > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) return {hi, p_hi, f_hi};
    p_hi = beta_deform(q, hi);
    f_hi = f(p_hi);
  }
  BetaSolution best{hi, p_hi, f_hi};
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    Spectrum p_mid = beta_deform(q, mid);
    const double f_mid = f(p_mid);
    if (std::abs(f_mid - target) < std::abs(best.value - target)) best = {mid, p_mid, f_mid};
    if (std::abs(f_mid - target) <= tolerance) break;
    if (f_mid > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// g_d search

namespace {

double s22_of(const std::array<double, 4>& q) { return s22_ef(Spectrum::from_weights(q)); }

// Ordering constraints on (p2, p4) for a fixed deficit y, with p1 = 1 - y and
// p3 = y - p2 - p4.
bool distance_slice_feasible(double y, double p2, double p4) {
  constexpr double slack = 1e-15;
  return p4 >= 0.0 && p2 <= 1.0 - y + slack && 2.0 * p2 + p4 >= y - slack && 2.0 * p4 + p2 <= y + slack;
}

struct Candidate {
  double s = std::numeric_limits<double>::infinity();
  std::array<double, 4> p{};
  double a = 0.0;  // first search coordinate
  double b = 0.0;  // second search coordinate
};

// Pattern search around a grid optimum. `evaluate` returns +inf when infeasible.
template <typename Eval>
Candidate refine(Candidate best, double step_a, double step_b, Eval&& evaluate) {
  while (step_a > 1e-15 || step_b > 1e-15) {
    bool improved = false;
    const std::array<std::array<double, 2>, 4> moves{{{step_a, 0.0}, {-step_a, 0.0}, {0.0, step_b}, {0.0, -step_b}}};
    for (const auto& move : moves) {
      Candidate c = evaluate(best.a + move[0], best.b + move[1]);
      if (c.s < best.s) {
        best = c;
        improved = true;
      }
    }
    if (!improved) {
      step_a *= 0.5;
      step_b *= 0.5;
    }
  }
  return best;
}

Candidate distance_candidate(double y, double p2, double p4) {
  Candidate c;
  c.a = p2;
  c.b = p4;
  if (!distance_slice_feasible(y, p2, p4)) return c;
  const double p3 = std::max(0.0, y - p2 - p4);
  c.p = {1.0 - y, p2, p3, p4};
  c.s = s22_of(c.p);
  return c;
}

Candidate distance_search(double y, int n) {
  Candidate best;
  const double p4_max = y / 3.0;
  for (int a = 0; a < n; ++a) {
    const double p4 = p4_max * a / (n - 1);
    const double lo = std::max(p4, (y - p4) / 2.0);
    const double hi = std::min(1.0 - y, y - 2.0 * p4);
    if (lo > hi + 1e-15) continue;
    for (int b = 0; b < n; ++b) {
      const double p2 = b == n - 1 ? hi : lo + (hi - lo) * b / (n - 1);
      Candidate c = distance_candidate(y, p2, p4);
      if (c.s < best.s) best = c;
    }
  }
  const double step = std::max(y, 1e-3) / n;
  return refine(best, step, step, [&](double p2, double p4) { return distance_candidate(y, p2, p4); });
}

double shannon_of(const std::array<double, 4>& q) {
  double h = 0.0;
  for (double x : q) h += entropy_term(x);
  return h;
}

// Fix (p3, p4); the entropy constraint h(p) = target then pins p1 (entropy is
// decreasing in p1 while p2 = rest shrinks from p1 to p3).
Candidate entropy_candidate(double target, double p3, double p4) {
  Candidate c;
  c.a = p3;
  c.b = p4;
  if (p4 < 0.0 || p4 > 0.25 || p3 < p4 || 3.0 * p3 + p4 > 1.0 + 1e-15) return c;
  const double rest = 1.0 - p3 - p4;
  double lo = rest / 2.0;  // p1 = p2
  double hi = rest - p3;   // p2 = p3
  if (hi < lo) hi = lo;
  const auto h_at = [&](double p1) { return shannon_of({p1, rest - p1, p3, p4}); };
  const double h_lo = h_at(lo);
  const double h_hi = h_at(hi);
  if (target > h_lo + 1e-12 || target < h_hi - 1e-12) return c;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h_at(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double p1 = 0.5 * (lo + hi);
  c.p = {p1, std::max(0.0, rest - p1), p3, p4};
  c.s = s22_of(c.p);
  return c;
}

Candidate entropy_search(double target, int n) {
  Candidate best;
  for (int a = 0; a < n; ++a) {
    const double p4 = 0.25 * a / (n - 1);
    const double p3_max = (1.0 - p4) / 3.0;
    for (int b = 0; b < n; ++b) {
      const double p3 = b == n - 1 ? p3_max : p4 + (p3_max - p4) * b / (n - 1);
      Candidate c = entropy_candidate(target, p3, p4);
      if (c.s < best.s) best = c;
    }
  }
  if (!std::isfinite(best.s)) throw DomainError("g_d_search: no spectrum on the entropy slice");
  const double step = 0.25 / n;
  return refine(best, step, step, [&](double p3, double p4) {
    p4 = std::clamp(p4, 0.0, 0.25);
    p3 = std::clamp(p3, p4, (1.0 - p4) / 3.0);
    return entropy_candidate(target, p3, p4);
  });
}

GdResult to_result(const Candidate& c) {
  return {c.s, std::vector<double>(c.p.begin(), c.p.end())};
}

}  // namespace

GdResult g_d_search(MonotoneKind kind, std::size_t d, double x, int grid_resolution) {
  if (d != 4) throw DomainError("g_d_numeric: only d = 4 (two qubits) is supported");
  if (grid_resolution < 2) throw DomainError("g_d_numeric: grid resolution must be at least 2");
  if (kind == MonotoneKind::mutual_information) {
    x = clamp_domain(x, 0.0, c_max(kind, d), "g_d_numeric");
    return to_result(entropy_search(x / 2.0, grid_resolution));
  }
  x = clamp_domain(x, 0.0, c_max(kind, d), "g_d_numeric");
  const double y = std::clamp(deficit_of_correlation(kind, x), 0.0, 0.75);
  if (y == 0.0) return {0.0, {1.0, 0.0, 0.0, 0.0}};
  return to_result(distance_search(y, grid_resolution));
}

double g_d_numeric(MonotoneKind kind, std::size_t d, double x, int grid_resolution) {
  return g_d_search(kind, d, x, grid_resolution).value;
}

double renyi_threshold(std::size_t d1, std::size_t d2, double alpha) {
  if (d1 < 2 || d2 < d1) throw DomainError("renyi_threshold: requires d1 >= 2 and d2 >= d1");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("renyi_threshold: alpha must lie in (0, 1]");
  const double d = static_cast<double>(d1 * d2);
  return std::log(d) - alpha / (2.0 * d * (d - 1.0));
}

// ---------------------------------------------------------------------------
// Curves

std::vector<double> linear_grid(double upper, std::size_t points) {
  if (points < 2) throw DomainError("linear_grid: need at least two points");
  std::vector<double> xs(points);
  for (std::size_t k = 0; k < points; ++k) xs[k] = upper * static_cast<double>(k) / static_cast<double>(points - 1);
  xs.back() = upper;
  return xs;
}

BoundCurve xi_curve(MonotoneKind kind, std::size_t points) {
  BoundCurve curve{kind, {}};
  if (kind == MonotoneKind::mutual_information) {
    const MutualInformationXi xi;
    for (double x : linear_grid(xi.upper(), points)) curve.samples.push_back({x, xi(x)});
    return curve;
  }
  for (double x : linear_grid(c_max(kind, 4), points)) curve.samples.push_back({x, xi_ef(kind, x)});
  return curve;
}

BoundCurve zeta_curve(MonotoneKind kind, std::size_t points) {
  BoundCurve curve{kind, {}};
  if (kind == MonotoneKind::mutual_information) {
    const MutualInformationXi xi;
    const auto bound = [&](double x) { return xi(x); };
    for (double x : linear_grid(std::log(4.0), points)) curve.samples.push_back({x, zeta_mi_of_xi(bound, x)});
    return curve;
  }
  const double upper = f_tilde(kind, Spectrum::uniform(4));
  for (double x : linear_grid(upper, points)) curve.samples.push_back({x, zeta_ef(kind, x)});
  return curve;
}

MutualInformationXi::MutualInformationXi(std::size_t nodes, int grid_resolution)
    : upper_(c_max(MonotoneKind::mutual_information, 4)) {
  if (nodes < 2) throw DomainError("MutualInformationXi: need at least two nodes");
  for (double x : linear_grid(upper_, nodes)) {
    const double g = g_d_numeric(MonotoneKind::mutual_information, 4, x, grid_resolution);
    values_.push_back(std::max(0.0, log2_nats() - g));
  }
}

double MutualInformationXi::operator()(double x) const {
  x = clamp_domain(x, 0.0, upper_, "MutualInformationXi");
  // xi is non-increasing, so the node on the left bounds it from above on the whole cell.
  const double pos = x / upper_ * static_cast<double>(values_.size() - 1);
  const auto k = std::min(static_cast<std::size_t>(pos), values_.size() - 1);
  return values_[k];
}

}  // namespace entcorr
