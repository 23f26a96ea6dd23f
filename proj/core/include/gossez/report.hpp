#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gossez/rational.hpp"
#include "gossez/sequences.hpp"
#include "gossez/verdict.hpp"

namespace gossez {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

enum class ReportFormat { Json, Csv, Markdown };

std::string_view to_string(ReportFormat format);
/// Accepts "json", "csv" and "md".
ReportFormat parse_report_format(std::string_view text);

struct CheckConfig {
  std::vector<std::string> checks{"all"};
  Index truncation = 64;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  Rational scale_max = 1000000;
  ReportFormat format = ReportFormat::Json;

  friend bool operator==(const CheckConfig&, const CheckConfig&) = default;
};

struct CheckResult {
  std::string name;
  std::vector<std::string> claims;
  std::string anchor;
  VerdictStatus expected = VerdictStatus::VerifiedOnSamples;
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::vector<PropertyVerdict> verdicts;
  /// Side channel; never part of the canonical serialization.
  double wallclock_ms = 0.0;

  bool passed() const { return status == expected; }
};

struct ReportDoc {
  std::string version{kArtifactVersion};
  CheckConfig config;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// Name of the first check whose status differs from its expectation.
  std::string first_failure() const;
};

/// Deterministic serialization. JSON has sorted keys and omits wallclock
/// unless `include_timing` is set; CSV has one row per check; Markdown is a
/// readable summary that always shows timings.
std::string emit(const ReportDoc& report, ReportFormat format, bool include_timing = false);

/// Decodes the JSON form produced by emit.
ReportDoc parse_report_json(std::string_view text);

}  // namespace gossez
