// entcorr: bound curves and Monte-Carlo checks for internal entanglement versus
// external correlations of a two-qubit system.
//
//   entcorr curve     --kind hellinger [--variant xi|zeta] --grid 201
//   entcorr verify    --kind bures --samples 100000 --dim-b 16
//   entcorr tightness --kind hellinger --grid 20
//   entcorr ccbound   --grid 20
//   entcorr gd        --kind bures --grid 20
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 check failed.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "entcorr/error.hpp"
#include "entcorr/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitCheck = 4;

struct Options {
  std::uint64_t seed = 20240611;
  std::size_t samples = 10000;
  std::size_t dim_b = 16;
  std::optional<std::size_t> grid;  // unset: per-command default
  std::string kind = "hellinger";
  std::optional<double> tolerance;
  std::string out;
  std::string format = "csv";
  bool full = false;
  std::size_t workers = 1;
  std::string variant = "xi";
  int restarts = 0;  // 0: library default
  int iterations = 0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "64-bit RNG seed");
  cmd->add_option("--samples", o.samples, "Number of Monte-Carlo samples");
  cmd->add_option("--dim-b", o.dim_b, "Dimension of the external system B");
  cmd->add_option("--grid", o.grid, "Number of x grid points");
  cmd->add_option("--kind", o.kind, "Correlation monotone: bures | hellinger | mutual_information");
  cmd->add_option("--tolerance", o.tolerance, "Pass/fail tolerance");
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--full", o.full, "Keep per-sample records in large JSON reports");
  cmd->add_option("--workers", o.workers, "Worker threads");
}

// Fail on an unusable --out path before spending time on the computation.
void check_output_path(const std::string& path) {
  if (path.empty() || path == "-") return;
  const std::filesystem::path parent = std::filesystem::absolute(path).parent_path();
  std::error_code ec;
  if (!std::filesystem::is_directory(parent, ec)) {
    throw entcorr::IoError("output directory does not exist: " + parent.string());
  }
}

entcorr::RunConfig to_config(const Options& o, std::size_t default_grid, double default_tolerance) {
  entcorr::RunConfig c;
  c.seed = o.seed;
  c.samples = o.samples;
  c.dim_b = o.dim_b;
  c.grid = o.grid.value_or(default_grid);
  const auto kind = entcorr::parse_monotone_kind(o.kind);
  if (!kind) throw entcorr::ConfigError("unknown --kind '" + o.kind + "'");
  c.kind = *kind;
  c.tolerance = o.tolerance.value_or(default_tolerance);
  c.out_path = o.out;
  c.format = o.format == "json" ? entcorr::OutputFormat::json : entcorr::OutputFormat::csv;
  c.full = o.full;
  c.workers = o.workers;
  if (o.variant == "xi") {
    c.variant = entcorr::CurveVariant::xi;
  } else if (o.variant == "zeta") {
    c.variant = entcorr::CurveVariant::zeta;
  } else {
    throw entcorr::ConfigError("unknown --variant '" + o.variant + "'");
  }
  if (o.restarts > 0) {
    c.orbit.restarts = o.restarts;
    c.alternating.restarts = o.restarts;
  }
  if (o.iterations > 0) {
    c.orbit.iterations = o.iterations;
    c.alternating.inner = o.iterations;
  }
  c.validate();
  check_output_path(c.out_path);
  return c;
}

int emit(const entcorr::Report& report, const entcorr::RunConfig& config) {
  entcorr::write_output(config.out_path, entcorr::render(report, config.format, config.full));
  if (config.format == entcorr::OutputFormat::csv && report.command != "curve") {
    nlohmann::json summary{{"command", report.command}, {"summary", report.summary}, {"passed", report.passed}};
    auto& sink = config.out_path.empty() ? std::cerr : std::cout;
    sink << summary.dump() << "\n";
  }
  return report.passed ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Internal entanglement versus external correlations: bounds and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", entcorr::kVersion);

  Options o;
  auto* curve = app.add_subcommand("curve", "Emit the xi or zeta bound curve");
  add_common(curve, o);
  curve->add_option("--variant", o.variant, "xi | zeta");
  auto* verify = app.add_subcommand("verify", "Check E_f(rho_A) <= xi(C(rho)) on Haar-random pure states");
  add_common(verify, o);
  auto* tightness = app.add_subcommand("tightness", "Construct states reaching the bound on an x grid");
  add_common(tightness, o);
  auto* ccbound = app.add_subcommand("ccbound", "Classical-classical boundary check for the Hellinger monotone");
  add_common(ccbound, o);
  auto* gd = app.add_subcommand("gd", "Compare the numeric infimum g_4 with the analytic bound");
  add_common(gd, o);
  for (auto* cmd : {tightness, ccbound}) {
    cmd->add_option("--restarts", o.restarts, "Optimizer restarts");
    cmd->add_option("--iterations", o.iterations, "Optimizer iterations per restart");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (curve->parsed()) {
      const auto config = to_config(o, 201, 1e-12);
      return emit(entcorr::make_report(entcorr::run_curve(config), config), config);
    }
    if (verify->parsed()) {
      const auto config = to_config(o, 201, 1e-9);
      return emit(entcorr::make_report(entcorr::run_verify(config), config), config);
    }
    if (tightness->parsed()) {
      const auto config = to_config(o, 20, 1e-6);
      return emit(entcorr::make_report(entcorr::run_tightness(config), config), config);
    }
    if (ccbound->parsed()) {
      const auto config = to_config(o, 20, 1e-3);
      return emit(entcorr::make_report(entcorr::run_ccbound(config), config), config);
    }
    if (gd->parsed()) {
      const auto config = to_config(o, 20, 1e-3);
      return emit(entcorr::make_report(entcorr::run_gd(config), config), config);
    }
  } catch (const entcorr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const entcorr::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const entcorr::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitConfig;
}
