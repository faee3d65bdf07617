#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entcorr/experiments.hpp"

namespace entcorr {

/// Output could not be written (maps to exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Above this many rows JSON output drops per-row records unless `full` is set.
inline constexpr std::size_t kMaxJsonRecords = 10000;

/// Rendered table: one command's rows plus the summary used for the JSON report and exit code.
struct Report {
  std::string command;
  nlohmann::json config;
  nlohmann::json summary;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<nlohmann::json> extras;  // optional per-row JSON fields, same length as rows or empty
  bool passed = true;
};

/// 17 significant digits, the shortest form that always round-trips a double.
std::string format_double(double value);

nlohmann::json config_json(const RunConfig& config);

Report make_report(const BoundCurve& curve, const RunConfig& config);
Report make_report(const VerifyReport& verify, const RunConfig& config);
Report make_report(const TightnessReport& tightness, const RunConfig& config);
Report make_report(const CcBoundReport& cc, const RunConfig& config);
Report make_report(const GdReport& gd, const RunConfig& config);

/// CSV: `#`-prefixed metadata, header row, LF line endings.
std::string render_csv(const Report& report);
/// {command, version, config, summary, records?}; records omitted past kMaxJsonRecords unless full.
std::string render_json(const Report& report, bool full);
std::string render(const Report& report, OutputFormat format, bool full);

/// Writes to `path`, or to standard output when path is empty. Throws IoError.
void write_output(const std::string& path, std::string_view content);

}  // namespace entcorr
