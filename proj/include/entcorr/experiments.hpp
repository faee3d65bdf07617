#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entcorr/bounds.hpp"
#include "entcorr/correlations.hpp"
#include "entcorr/measures.hpp"

namespace entcorr {

inline constexpr const char* kVersion = "0.3.0";

enum class OutputFormat { csv, json };
enum class CurveVariant { xi, zeta };

/// Invalid run configuration (maps to exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::uint64_t seed = 20240611;
  std::size_t samples = 10000;
  std::size_t dim_b = 16;
  std::size_t grid = 201;
  MonotoneKind kind = MonotoneKind::hellinger;
  double tolerance = 1e-9;
  std::string out_path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
  bool full = false;
  std::size_t workers = 1;
  CurveVariant variant = CurveVariant::xi;
  OrbitSearchOptions orbit{};
  AlternatingOptions alternating{};

  /// Throws ConfigError on samples < 1, grid < 2, dim_b < 1, tolerance <= 0, workers < 1.
  void validate() const;
};

/// Runs body(i) for i in [0, count) on `workers` threads. Each index is processed
/// exactly once; callers write results into index-addressed slots.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& body);

// -- curve ------------------------------------------------------------------

/// xi (variant xi) or zeta (variant zeta) on config.grid points for config.kind.
/// Mutual information only has the zeta variant.
BoundCurve run_curve(const RunConfig& config);

// -- verify -----------------------------------------------------------------

struct VerifyRecord {
  std::size_t index = 0;
  double x = 0.0;      // correlation of the global pure state
  double e = 0.0;      // entanglement of formation of the two-qubit marginal
  double bound = 0.0;  // xi(x)
  double slack = 0.0;  // bound - e
  std::vector<double> spectrum;
};

struct VerifySummary {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double max_violation = 0.0;  // largest e - bound, 0 if none positive
  double min_slack = 0.0;
  std::size_t above_threshold = 0;           // samples with x past the vanishing threshold
  std::size_t entangled_above_threshold = 0; // of those, samples with e > tolerance
};

struct VerifyReport {
  std::vector<VerifyRecord> records;
  VerifySummary summary;
  bool passed() const { return summary.violations == 0 && summary.entangled_above_threshold == 0; }
};

/// Haar-random pure states on 4 x dim_b; checks E_f(rho_A) <= xi(C) with C exact on pure states.
VerifyReport run_verify(const RunConfig& config);

// -- tightness --------------------------------------------------------------

struct TightnessRow {
  double x = 0.0;
  double deficit = 0.0;
  double bound = 0.0;
  double achieved = 0.0;     // E_f of the constructed marginal
  double gap = 0.0;          // bound - achieved
  double correlation = 0.0;  // correlation of the purified global state (should equal x)
  double orbit = 0.0;        // unitary-orbit optimizer on the same spectrum
  double orbit_gap = 0.0;
};

struct TightnessReport {
  std::vector<TightnessRow> rows;
  double max_gap = 0.0;
  double max_orbit_gap = 0.0;
  double max_correlation_error = 0.0;
};

/// Spectrum on the correlation slice reaching the bound: (1-y, y), (1-y, 1-y, 2y-1),
/// or (1-y, y/3, y/3, y/3) past the vanishing point.
Spectrum optimal_slice_spectrum(double deficit);

TightnessReport run_tightness(const RunConfig& config, bool with_orbit = true);

// -- ccbound ----------------------------------------------------------------

struct CcBoundRow {
  double x = 0.0;
  double beta = 1.0;
  double spectral = 0.0;   // f_db of the deformed spectrum (target x)
  double numeric = 0.0;    // alternating-minimization Hellinger correlation
  double gap = 0.0;        // numeric - x
  double e = 0.0;          // E_f of the marginal
  double zeta = 0.0;
};

struct CcBoundReport {
  std::vector<CcBoundRow> rows;
  double max_abs_gap = 0.0;
  double max_excess = 0.0;  // largest e - zeta
};

CcBoundReport run_ccbound(const RunConfig& config);

// -- gd ---------------------------------------------------------------------

struct GdRow {
  double x = 0.0;
  double analytic = 0.0;  // xi_ef(kind, x)
  double numeric = 0.0;   // ln 2 - g_d_numeric(kind, 4, x)
  double diff = 0.0;
};

struct GdReport {
  std::vector<GdRow> rows;
  double max_diff = 0.0;
};

GdReport run_gd(const RunConfig& config, int grid_resolution = 200);

}  // namespace entcorr
