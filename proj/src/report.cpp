#include "entcorr/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace entcorr {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json config_json(const RunConfig& config) {
  return {
      {"seed", config.seed},
      {"samples", config.samples},
      {"dim_b", config.dim_b},
      {"grid", config.grid},
      {"kind", std::string(to_string(config.kind))},
      {"tolerance", config.tolerance},
      {"format", config.format == OutputFormat::csv ? "csv" : "json"},
      {"workers", config.workers},
      {"variant", config.variant == CurveVariant::xi ? "xi" : "zeta"},
  };
}

Report make_report(const BoundCurve& curve, const RunConfig& config) {
  Report r;
  r.command = "curve";
  r.config = config_json(config);
  r.columns = {"x", "bound"};
  for (const CurvePoint& pt : curve.samples) r.rows.push_back({pt.x, pt.bound});
  r.summary = {{"points", curve.samples.size()},
               {"bound_at_zero", curve.samples.front().bound},
               {"bound_at_max", curve.samples.back().bound}};
  return r;
}

Report make_report(const VerifyReport& verify, const RunConfig& config) {
  Report r;
  r.command = "verify";
  r.config = config_json(config);
  r.columns = {"idx", "x", "e", "bound", "slack"};
  for (const VerifyRecord& rec : verify.records) {
    r.rows.push_back({static_cast<double>(rec.index), rec.x, rec.e, rec.bound, rec.slack});
    r.extras.push_back({{"spectrum", rec.spectrum}});
  }
  const VerifySummary& s = verify.summary;
  r.summary = {{"samples", s.samples},
               {"violations", s.violations},
               {"max_violation", s.max_violation},
               {"min_slack", s.min_slack},
               {"above_threshold", s.above_threshold},
               {"entangled_above_threshold", s.entangled_above_threshold}};
  r.passed = verify.passed();
  return r;
}

Report make_report(const TightnessReport& tightness, const RunConfig& config) {
  Report r;
  r.command = "tightness";
  r.config = config_json(config);
  r.columns = {"x", "deficit", "bound", "achieved", "gap", "correlation", "orbit", "orbit_gap"};
  for (const TightnessRow& row : tightness.rows) {
    r.rows.push_back({row.x, row.deficit, row.bound, row.achieved, row.gap, row.correlation, row.orbit, row.orbit_gap});
  }
  r.summary = {{"max_gap", tightness.max_gap},
               {"max_orbit_gap", tightness.max_orbit_gap},
               {"max_correlation_error", tightness.max_correlation_error}};
  r.passed = tightness.max_gap <= config.tolerance;
  return r;
}

Report make_report(const CcBoundReport& cc, const RunConfig& config) {
  Report r;
  r.command = "ccbound";
  r.config = config_json(config);
  r.columns = {"x", "beta", "spectral", "numeric", "gap", "e", "zeta"};
  for (const CcBoundRow& row : cc.rows) r.rows.push_back({row.x, row.beta, row.spectral, row.numeric, row.gap, row.e, row.zeta});
  r.summary = {{"max_abs_gap", cc.max_abs_gap}, {"max_excess", cc.max_excess}};
  r.passed = cc.max_abs_gap <= config.tolerance && cc.max_excess <= config.tolerance;
  return r;
}

Report make_report(const GdReport& gd, const RunConfig& config) {
  Report r;
  r.command = "gd";
  r.config = config_json(config);
  r.columns = {"x", "analytic", "numeric", "diff"};
  for (const GdRow& row : gd.rows) r.rows.push_back({row.x, row.analytic, row.numeric, row.diff});
  r.summary = {{"max_diff", gd.max_diff}};
  r.passed = gd.max_diff <= config.tolerance;
  return r;
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  out << "# entcorr " << kVersion << "\n";
  out << "# command=" << report.command << "\n";
  for (const auto& [key, value] : report.config.items()) {
    out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (std::size_t c = 0; c < report.columns.size(); ++c) out << (c ? "," : "") << report.columns[c];
  out << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "");
      if (report.columns[c] == "idx") {
        out << static_cast<unsigned long long>(row[c]);
      } else {
        out << format_double(row[c]);
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_json(const Report& report, bool full) {
  nlohmann::json doc;
  doc["command"] = report.command;
  doc["version"] = kVersion;
  doc["config"] = report.config;
  doc["summary"] = report.summary;
  doc["passed"] = report.passed;
  if (full || report.rows.size() <= kMaxJsonRecords) {
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      nlohmann::json rec;
      for (std::size_t c = 0; c < report.columns.size(); ++c) {
        if (report.columns[c] == "idx") {
          rec[report.columns[c]] = static_cast<std::uint64_t>(report.rows[i][c]);
        } else {
          rec[report.columns[c]] = report.rows[i][c];
        }
      }
      if (i < report.extras.size()) rec.update(report.extras[i]);
      records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
  }
  return doc.dump(2) + "\n";
}

std::string render(const Report& report, OutputFormat format, bool full) {
  return format == OutputFormat::csv ? render_csv(report) : render_json(report, full);
}

void write_output(const std::string& path, std::string_view content) {
  if (path.empty() || path == "-") {
    std::cout.write(content.data(), static_cast<std::streamsize>(content.size()));
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace entcorr
