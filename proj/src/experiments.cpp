#include "entcorr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "entcorr/error.hpp"
#include "entcorr/sampling.hpp"
#include "entcorr/tolerance.hpp"

namespace entcorr {

void RunConfig::validate() const {
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (grid < 2) throw ConfigError("grid must have at least 2 points");
  if (dim_b < 1) throw ConfigError("dim_b must be at least 1");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (orbit.restarts < 1 || orbit.iterations < 0) throw ConfigError("orbit search budget must be positive");
  if (alternating.restarts < 1 || alternating.outer < 1 || alternating.inner < 0) {
    throw ConfigError("alternating search budget must be positive");
  }
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

BoundCurve run_curve(const RunConfig& config) {
  config.validate();
  if (config.variant == CurveVariant::xi) {
    if (config.kind == MonotoneKind::mutual_information) {
      throw ConfigError("curve: the mutual information is only available as the zeta variant");
    }
    return xi_curve(config.kind, config.grid);
  }
  if (config.kind == MonotoneKind::bures) throw ConfigError("curve: no zeta curve for the Bures monotone");
  return zeta_curve(config.kind, config.grid);
}

VerifyReport run_verify(const RunConfig& config) {
  config.validate();
  const BipartiteSplit global(4, config.dim_b);
  const BipartiteSplit internal(2, 2);
  const MonotoneKind kind = config.kind;

  std::optional<MutualInformationXi> mi_xi;
  if (kind == MonotoneKind::mutual_information) mi_xi.emplace();
  const auto bound_of = [&](double x) { return mi_xi ? (*mi_xi)(x) : xi_ef(kind, x); };
  const double vanish = kind == MonotoneKind::mutual_information ? std::numeric_limits<double>::infinity()
                                                                  : threshold(kind);

  VerifyReport report;
  report.records.resize(config.samples);
  parallel_for(config.samples, config.workers, [&](std::size_t i) {
    Rng rng = Rng::stream(config.seed, i);
    const PureState psi = haar_pure(global.dim(), rng);
    const DensityMatrix rho_a = reduced_state(psi, global, Subsystem::first);
    VerifyRecord& r = report.records[i];
    r.index = i;
    r.x = c_on_pure(psi, global, kind);
    r.e = entanglement(MeasureTag::entanglement_of_formation, rho_a, internal).value;
    r.bound = bound_of(std::min(r.x, kind == MonotoneKind::mutual_information ? mi_xi->upper() : c_max(kind, 4)));
    r.slack = r.bound - r.e;
    const Spectrum s = spectrum(rho_a);
    r.spectrum.assign(s.components().begin(), s.components().end());
  });

  VerifySummary& sum = report.summary;
  sum.samples = config.samples;
  sum.min_slack = std::numeric_limits<double>::infinity();
  for (const VerifyRecord& r : report.records) {
    sum.min_slack = std::min(sum.min_slack, r.slack);
    if (r.slack < -config.tolerance) ++sum.violations;
    sum.max_violation = std::max(sum.max_violation, -r.slack);
    if (r.x > vanish) {
      ++sum.above_threshold;
      if (r.e > config.tolerance) ++sum.entangled_above_threshold;
    }
  }
  return report;
}

Spectrum optimal_slice_spectrum(double deficit) {
  const double y = deficit;
  if (y < 0.0 || y > 0.75 + 1e-12) throw DomainError("optimal_slice_spectrum: deficit outside [0, 3/4]");
  if (y <= 0.5) {
    const std::vector<double> w{1.0 - y, y};
    return Spectrum::from_weights(w);
  }
  if (y <= 2.0 / 3.0) {
    const std::vector<double> w{1.0 - y, 1.0 - y, 2.0 * y - 1.0};
    return Spectrum::from_weights(w);
  }
  const double t = std::min(y, 0.75);
  const std::vector<double> w{1.0 - t, t / 3.0, t / 3.0, t / 3.0};
  return Spectrum::from_weights(w);
}

TightnessReport run_tightness(const RunConfig& config, bool with_orbit) {
  config.validate();
  if (config.kind == MonotoneKind::mutual_information) {
    throw ConfigError("tightness: requires the Bures or Hellinger monotone");
  }
  if (config.dim_b < 4) throw ConfigError("tightness: dim_b must be at least 4 to purify a two-qubit state");
  const MonotoneKind kind = config.kind;
  const BipartiteSplit global(4, config.dim_b);
  const std::vector<double> xs = linear_grid(c_max(kind, 4), config.grid);

  TightnessReport report;
  report.rows.resize(xs.size());
  parallel_for(xs.size(), config.workers, [&](std::size_t i) {
    TightnessRow& row = report.rows[i];
    row.x = xs[i];
    row.deficit = std::clamp(deficit_of_correlation(kind, row.x), 0.0, 0.75);
    row.bound = xi_ef(kind, row.x);
    const Spectrum p = optimal_slice_spectrum(row.deficit);
    const DensityMatrix rho_a = max_ef_state(p);
    row.achieved = entanglement_of_formation(rho_a);
    row.gap = row.bound - row.achieved;
    const PureState psi = purify_into(rho_a, config.dim_b);
    row.correlation = c_on_pure(psi, global, kind);
    if (with_orbit) {
      Rng rng = Rng::stream(config.seed, i);
      row.orbit = max_ef_over_spectrum_numeric(p, config.orbit, rng);
      row.orbit_gap = row.bound - row.orbit;
    }
  });
  for (const TightnessRow& row : report.rows) {
    report.max_gap = std::max(report.max_gap, std::abs(row.gap));
    if (with_orbit) report.max_orbit_gap = std::max(report.max_orbit_gap, std::abs(row.orbit_gap));
    report.max_correlation_error = std::max(report.max_correlation_error, std::abs(row.correlation - row.x));
  }
  return report;
}

CcBoundReport run_ccbound(const RunConfig& config) {
  config.validate();
  if (config.kind != MonotoneKind::hellinger) throw ConfigError("ccbound: requires the Hellinger monotone");
  if (config.dim_b < 4) throw ConfigError("ccbound: dim_b must be at least 4");
  const BipartiteSplit global(4, config.dim_b);
  const Spectrum uniform = Spectrum::uniform(4);
  const std::vector<double> xs = linear_grid(f_tilde(MonotoneKind::hellinger, uniform), config.grid);

  CcBoundReport report;
  report.rows.resize(xs.size());
  parallel_for(xs.size(), config.workers, [&](std::size_t i) {
    CcBoundRow& row = report.rows[i];
    row.x = xs[i];
    const BetaSolution sol = solve_beta(uniform, [](const Spectrum& p) { return f_db(p); }, row.x);
    row.beta = sol.beta;
    row.spectral = sol.value;
    const DensityMatrix rho = strictly_correlated_cc(sol.p, 4, config.dim_b);
    Rng rng = Rng::stream(config.seed, i);
    row.numeric = c_distance_numeric(rho, global, MonotoneKind::hellinger, config.alternating, rng);
    row.gap = row.numeric - row.x;
    row.e = entanglement_of_formation(partial_trace(rho, global, Subsystem::first));
    row.zeta = zeta_ef(MonotoneKind::hellinger, row.x);
  });
  for (const CcBoundRow& row : report.rows) {
    report.max_abs_gap = std::max(report.max_abs_gap, std::abs(row.gap));
    report.max_excess = std::max(report.max_excess, row.e - row.zeta);
  }
  return report;
}

GdReport run_gd(const RunConfig& config, int grid_resolution) {
  config.validate();
  if (config.kind == MonotoneKind::mutual_information) throw ConfigError("gd: requires the Bures or Hellinger monotone");
  const std::vector<double> xs = linear_grid(c_max(config.kind, 4), config.grid);
  GdReport report;
  report.rows.resize(xs.size());
  parallel_for(xs.size(), config.workers, [&](std::size_t i) {
    GdRow& row = report.rows[i];
    row.x = xs[i];
    row.analytic = xi_ef(config.kind, row.x);
    row.numeric = std::log(2.0) - g_d_numeric(config.kind, 4, row.x, grid_resolution);
    row.diff = std::abs(row.numeric - row.analytic);
  });
  for (const GdRow& row : report.rows) report.max_diff = std::max(report.max_diff, row.diff);
  return report;
}

}  // namespace entcorr
