#include "cli/records.hpp"

#include <chrono>
#include <ctime>
#include <vector>

#include <json.hpp>

#include "bstick/rational.hpp"

namespace bstick::cli {
namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json or_null(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

template <class T>
std::string csv_optional(const std::optional<T>& value) {
  if (!value) return "";
  if constexpr (std::is_same_v<T, std::string>) {
    return csv_cell(*value);
  } else {
    return std::to_string(*value);
  }
}

}  // namespace

void write_records(std::ostream& os, std::span<const OutputRecord> records, Format format) {
  if (format == Format::Json) {
    Json array = Json::array();
    for (const auto& r : records) {
      array.push_back(Json{
          {"kind", r.kind},
          {"k", or_null(r.k)},
          {"n", or_null(r.n)},
          {"event", or_null(r.event)},
          {"value_exact", or_null(r.value_exact)},
          {"value_decimal", r.value_decimal},
          {"ci_low", or_null(r.ci_low)},
          {"ci_high", or_null(r.ci_high)},
          {"trials", or_null(r.trials)},
          {"seed", or_null(r.seed)},
          {"generator_id", or_null(r.generator_id)},
          {"timestamp", r.timestamp},
      });
    }
    os << array.dump(2) << '\n';
    return;
  }
  os << kRecordCsvHeader << '\n';
  for (const auto& r : records) {
    os << csv_cell(r.kind) << ',' << csv_optional(r.k) << ',' << csv_optional(r.n) << ',' << csv_optional(r.event)
       << ',' << csv_optional(r.value_exact) << ',' << csv_cell(r.value_decimal) << ',' << csv_optional(r.ci_low)
       << ',' << csv_optional(r.ci_high) << ',' << csv_optional(r.trials) << ',' << csv_optional(r.seed) << ','
       << csv_optional(r.generator_id) << ',' << csv_cell(r.timestamp) << '\n';
  }
}

void write_report(std::ostream& os, const VerificationReport& report, Format format) {
  if (format == Format::Json) {
    Json array = Json::array();
    for (const auto& e : report.entries) {
      array.push_back(Json{
          {"check_id", e.check_id},
          {"expected", e.expected},
          {"actual", e.actual},
          {"residual", e.residual},
          {"tolerance", e.tolerance},
          {"passed", e.passed},
          {"runtime_ms", e.runtime_ms},
      });
    }
    os << array.dump(2) << '\n';
    return;
  }
  os << kReportCsvHeader << '\n';
  for (const auto& e : report.entries) {
    os << csv_cell(e.check_id) << ',' << csv_cell(e.expected) << ',' << csv_cell(e.actual) << ','
       << format_decimal(e.residual) << ',' << format_decimal(e.tolerance) << ',' << (e.passed ? "true" : "false")
       << ',' << e.runtime_ms << '\n';
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace bstick::cli
