#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "bstick/report.hpp"

namespace bstick::cli {

enum class Format { Csv, Json };

/// One output row. Field names (JSON keys and CSV columns):
///   kind          "exact" | "estimate"
///   k, n          integers, optional
///   event         formula or event description, optional
///   value_exact   "num/den", optional
///   value_decimal 12 significant digits, always present
///   ci_low, ci_high, trials, seed, generator_id   estimates only
///   timestamp     ISO-8601 UTC
/// Absent optional fields are JSON null and empty CSV cells.
struct OutputRecord {
  std::string kind;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<std::string> event;
  std::optional<std::string> value_exact;
  std::string value_decimal;
  std::optional<std::string> ci_low;
  std::optional<std::string> ci_high;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator_id;
  std::string timestamp;
};

inline constexpr const char* kRecordCsvHeader =
    "kind,k,n,event,value_exact,value_decimal,ci_low,ci_high,trials,seed,generator_id,timestamp";

inline constexpr const char* kReportCsvHeader = "check_id,expected,actual,residual,tolerance,passed,runtime_ms";

/// JSON: a single top-level array of objects. CSV: header row then one row
/// per record.
void write_records(std::ostream& os, std::span<const OutputRecord> records, Format format);

/// Verification report entries in the same two layouts.
void write_report(std::ostream& os, const VerificationReport& report, Format format);

/// Current UTC time as "YYYY-MM-DDThh:mm:ssZ".
std::string utc_timestamp();

}  // namespace bstick::cli
