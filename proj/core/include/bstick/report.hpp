#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bstick/rational.hpp"

namespace bstick {

struct VerificationEntry {
  std::string check_id;
  std::string expected;
  std::string actual;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::int64_t runtime_ms = 0;
};

/// Exact comparison: residual is |expected - actual| and only 0 passes.
VerificationEntry exact_check(std::string check_id, const Rational& expected, const Rational& actual);

/// passed = residual <= tolerance; a NaN residual fails.
VerificationEntry tolerance_check(std::string check_id, std::string expected, std::string actual, double residual,
                                  double tolerance);

struct VerificationReport {
  std::vector<VerificationEntry> entries;

  bool all_passed() const;
  std::size_t failure_count() const;
  void append(const VerificationReport& other);
  /// Orders entries by check_id; ties keep their relative order.
  void sort_by_id();
};

}  // namespace bstick
