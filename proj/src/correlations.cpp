#include "entcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entcorr/distance.hpp"
#include "entcorr/entropy.hpp"
#include "entcorr/error.hpp"
#include "entcorr/sampling.hpp"
#include "entcorr/tolerance.hpp"

namespace entcorr {

std::string_view to_string(MonotoneKind kind) {
  switch (kind) {
    case MonotoneKind::mutual_information:
      return "mutual_information";
    case MonotoneKind::bures:
      return "bures";
    case MonotoneKind::hellinger:
      return "hellinger";
  }
  return "unknown";
}

std::optional<MonotoneKind> parse_monotone_kind(std::string_view name) {
  if (name == "mutual_information" || name == "mi") return MonotoneKind::mutual_information;
  if (name == "bures") return MonotoneKind::bures;
  if (name == "hellinger") return MonotoneKind::hellinger;
  return std::nullopt;
}

namespace {

// 1 - p1 summed from the tail, smallest first: no cancellation near the point mass.
double tail_mass(const Spectrum& p) {
  double rest = 0.0;
  for (std::size_t i = p.size(); i-- > 1;) rest += p[i];
  return rest;
}

}  // namespace

// 1 - sqrt(p1) = (1 - p1) / (1 + sqrt(p1))
double f_db(const Spectrum& p) { return std::sqrt(2.0 * tail_mass(p) / (1.0 + std::sqrt(p[0]))); }

double f_dh(const Spectrum& p) { return std::sqrt(2.0 * tail_mass(p)); }

double f_mi(const Spectrum& p) { return 2.0 * shannon_entropy(p); }

double f_kind(MonotoneKind kind, const Spectrum& p) {
  switch (kind) {
    case MonotoneKind::mutual_information:
      return f_mi(p);
    case MonotoneKind::bures:
      return f_db(p);
    case MonotoneKind::hellinger:
      return f_dh(p);
  }
  throw DomainError("f_kind: unknown monotone");
}

double f_tilde(MonotoneKind kind, const Spectrum& p) {
  switch (kind) {
    case MonotoneKind::mutual_information:
      return shannon_entropy(p);
    case MonotoneKind::bures:
    case MonotoneKind::hellinger:
      return f_db(p);
  }
  throw DomainError("f_tilde: unknown monotone");
}

double c_max(MonotoneKind kind, std::size_t d) {
  if (d == 0) throw DomainError("c_max: dimension must be positive");
  return f_kind(kind, Spectrum::uniform(d));
}

double mutual_information(const DensityMatrix& rho, const BipartiteSplit& split) {
  if (rho.dim() != split.dim()) throw DomainError("mutual_information: state dimension does not match split");
  const double sa = von_neumann_entropy(partial_trace(rho, split, Subsystem::first));
  const double sb = von_neumann_entropy(partial_trace(rho, split, Subsystem::second));
  return std::max(0.0, sa + sb - von_neumann_entropy(rho));
}

double c_on_pure(const PureState& psi, const BipartiteSplit& split, MonotoneKind kind) {
  return f_kind(kind, schmidt(psi, split));
}

// ---------------------------------------------------------------------------
// Alternating minimization over product states

namespace {

// Overlap between rho and a product operator, restricted to the support of rho.
// Bures: tr sqrt(W G W) with G_mn = <m|X (x) Y|n>, W = diag(sqrt mu).
// Hellinger: sum_m sqrt(mu_m) <m|X (x) Y|m>, with X, Y the square roots of the factors.
class ProductOverlap {
 public:
  ProductOverlap(const DensityMatrix& rho, const BipartiteSplit& split, MonotoneKind kind) : kind_(kind) {
    const HermitianEig eig = hermitian_eig(rho.matrix());
    for (Eigen::Index m = 0; m < eig.values.size(); ++m) {
      if (eig.values(m) <= tol::zero) continue;
      weights_.push_back(std::sqrt(eig.values(m)));
      coeffs_.push_back(PureState::normalized(eig.vectors.col(m)).coefficient_matrix(split));
    }
  }

  std::size_t rank() const { return coeffs_.size(); }

  // Precompute K_mn so that <m|X (x) Y|n> = tr(X K_mn) with Y held fixed.
  void fix_second(const ComplexMatrix& y) {
    kernels_ = build([&](const ComplexMatrix& a, const ComplexMatrix& b) { return b * y.transpose() * a.adjoint(); });
  }
  // Precompute J_mn so that <m|X (x) Y|n> = tr(Y J_mn) with X held fixed.
  void fix_first(const ComplexMatrix& x) {
    kernels_ = build([&](const ComplexMatrix& a, const ComplexMatrix& b) {
      return ComplexMatrix((a.adjoint() * x * b).transpose());
    });
  }

  // The overlap is linear in the free factor for Hellinger and the square root of a linear
  // functional for Bures on a pure state; the maximizer is then explicit.
  bool has_best_response() const { return kind_ == MonotoneKind::hellinger || rank() == 1; }

  // Optimal free factor given the fixed one: the normalized positive operator G for
  // Hellinger (G is PSD, unit Frobenius norm), the top eigenprojector of G for Bures.
  ComplexMatrix best_response() const {
    const std::size_t r = rank();
    // Re tr(X K) = tr(X (K + K^dagger) / 2) for Hermitian X.
    ComplexMatrix g = weights_[0] * kernels_[0];
    for (std::size_t m = 1; m < r; ++m) g += weights_[m] * kernels_[m * r + m];
    g = 0.5 * (g + g.adjoint());
    const HermitianEig eig = hermitian_eig(g);
    if (kind_ == MonotoneKind::bures) return eig.vectors.col(0) * eig.vectors.col(0).adjoint();
    RealVector positive = eig.values.cwiseMax(0.0);
    if (!(positive.norm() > 0.0)) return ComplexMatrix();
    positive /= positive.norm();
    return eig.vectors * positive.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  }

  double evaluate(const ComplexMatrix& factor) const {
    const std::size_t r = rank();
    if (kind_ == MonotoneKind::hellinger) {
      double s = 0.0;
      for (std::size_t m = 0; m < r; ++m) s += weights_[m] * trace_product(factor, kernels_[m * r + m]);
      return s;
    }
    if (r == 1) return weights_[0] * std::sqrt(std::max(0.0, trace_product(factor, kernels_[0])));
    ComplexMatrix g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t m = 0; m < r; ++m)
      for (std::size_t n = 0; n < r; ++n)
        g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
            weights_[m] * weights_[n] * (factor.cwiseProduct(kernels_[m * r + n].transpose())).sum();
    g = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(g, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) s += std::sqrt(std::max(0.0, solver.eigenvalues()(k)));
    return s;
  }

 private:
  template <typename F>
  std::vector<ComplexMatrix> build(F&& kernel) const {
    const std::size_t r = rank();
    std::vector<ComplexMatrix> out;
    out.reserve(r * r);
    for (std::size_t m = 0; m < r; ++m)
      for (std::size_t n = 0; n < r; ++n) {
        if (kind_ == MonotoneKind::hellinger && m != n) {
          out.emplace_back();
          continue;
        }
        out.push_back(kernel(coeffs_[m], coeffs_[n]));
      }
    return out;
  }

  static double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a.cwiseProduct(b.transpose())).sum().real();
  }

  MonotoneKind kind_;
  std::vector<double> weights_;
  std::vector<ComplexMatrix> coeffs_;
  std::vector<ComplexMatrix> kernels_;
};

// Bures factors are L L^dagger / tr; Hellinger factors are the square roots, L L^dagger / ||.||_F.
ComplexMatrix factor_operator(const ComplexMatrix& l, MonotoneKind kind) {
  const ComplexMatrix g = l * l.adjoint();
  if (kind == MonotoneKind::hellinger) return g / g.norm();
  return g / g.trace().real();
}

// Factor whose operator reproduces rho (or its square root for Hellinger).
ComplexMatrix factor_for(const DensityMatrix& rho, MonotoneKind kind) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  RealVector scale(eig.values.size());
  const double power = kind == MonotoneKind::hellinger ? 0.25 : 0.5;
  for (Eigen::Index k = 0; k < scale.size(); ++k) scale(k) = std::pow(std::max(0.0, eig.values(k)), power);
  ComplexMatrix l = eig.vectors * scale.cast<Complex>().asDiagonal();
  return l / l.norm();
}

struct LocalSearch {
  double step;
  int rejected = 0;
};

// Accept-if-improve search on one factor; returns the improved overlap.
double improve_factor(ComplexMatrix& l, LocalSearch& search, const ProductOverlap& overlap, MonotoneKind kind,
                      double current, const AlternatingOptions& options, Rng& rng) {
  const auto n = static_cast<std::size_t>(l.rows());
  const double scale = 1.0 / std::sqrt(static_cast<double>(n * n));
  for (int it = 0; it < options.inner; ++it) {
    ComplexMatrix trial = l + (search.step * scale) * complex_gaussian_matrix(n, n, rng);
    const double norm = trial.norm();
    if (!(norm > 0.0)) continue;
    trial /= norm;
    const double value = overlap.evaluate(factor_operator(trial, kind));
    if (value > current) {
      current = value;
      l = std::move(trial);
      search.rejected = 0;
    } else if (++search.rejected >= options.patience) {
      search.step *= options.decay;
      search.rejected = 0;
    }
  }
  return current;
}

// Alternating exact maximization; each half-step cannot decrease the overlap.
double alternate_exact(ProductOverlap& overlap, ComplexMatrix x, ComplexMatrix y, const AlternatingOptions& options) {
  overlap.fix_second(y);
  double value = overlap.evaluate(x);
  const int rounds = options.outer * std::max(1, options.inner);
  for (int round = 0; round < rounds; ++round) {
    ComplexMatrix next_x = overlap.best_response();
    if (next_x.size() == 0) break;
    x = std::move(next_x);
    overlap.fix_first(x);
    ComplexMatrix next_y = overlap.best_response();
    if (next_y.size() == 0) break;
    y = std::move(next_y);
    overlap.fix_second(y);
    const double next = overlap.evaluate(x);
    const bool stalled = next - value <= 1e-15;
    value = std::max(value, next);
    if (stalled) break;
  }
  return value;
}

}  // namespace

double c_distance_numeric(const DensityMatrix& rho, const BipartiteSplit& split, MonotoneKind kind,
                          const AlternatingOptions& options, Rng& rng) {
  if (kind == MonotoneKind::mutual_information) {
    throw DomainError("c_distance_numeric: only the Bures and Hellinger monotones are distance based");
  }
  if (rho.dim() != split.dim()) throw DomainError("c_distance_numeric: state dimension does not match split");
  if (split.dim() > 64) throw DomainError("c_distance_numeric: dimension above 64 is not supported");

  ProductOverlap overlap(rho, split, kind);
  const DensityMatrix marginal_a = partial_trace(rho, split, Subsystem::first);
  const DensityMatrix marginal_b = partial_trace(rho, split, Subsystem::second);

  const std::uint64_t base = rng();
  double best = -1.0;
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    Rng stream = Rng::stream(base, static_cast<std::uint64_t>(restart));
    ComplexMatrix la;
    ComplexMatrix lb;
    if (restart == 0) {
      la = factor_for(marginal_a, kind);
      lb = factor_for(marginal_b, kind);
    } else {
      la = complex_gaussian_matrix(split.d1, split.d1, stream);
      lb = complex_gaussian_matrix(split.d2, split.d2, stream);
      la /= la.norm();
      lb /= lb.norm();
    }
    if (overlap.has_best_response()) {
      best = std::max(best, alternate_exact(overlap, factor_operator(la, kind), factor_operator(lb, kind), options));
      continue;
    }
    LocalSearch search_a{options.initial_step};
    LocalSearch search_b{options.initial_step};

    overlap.fix_second(factor_operator(lb, kind));
    double value = overlap.evaluate(factor_operator(la, kind));
    for (int round = 0; round < options.outer; ++round) {
      overlap.fix_second(factor_operator(lb, kind));
      value = improve_factor(la, search_a, overlap, kind, value, options, stream);
      overlap.fix_first(factor_operator(la, kind));
      value = improve_factor(lb, search_b, overlap, kind, value, options, stream);
    }
    best = std::max(best, value);
  }
  return distance_from_overlap(std::min(1.0, best));
}

}  // namespace entcorr
