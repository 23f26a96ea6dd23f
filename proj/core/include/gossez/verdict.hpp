#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gossez/pair_point.hpp"
#include "gossez/rational.hpp"

namespace gossez {

/// Finite computations never certify maximality, so there is no "proved"
/// status: samples verify, exact witnesses refute or exhibit.
enum class VerdictStatus { VerifiedOnSamples, Refuted, WitnessFound, Inconclusive };

std::string_view to_string(VerdictStatus status);
VerdictStatus parse_verdict_status(std::string_view text);

/// Exact, re-checkable evidence: the points involved and the named values
/// of the inequality they witness.
struct Witness {
  std::string kind;
  std::vector<PairPoint> points;
  std::map<std::string, Rational> values;
  std::string note;

  const Rational& value(std::string_view name) const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerdictStats {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::optional<Rational> min_value;
  std::optional<Rational> max_value;
  /// Additional counters and exact quantities, keyed for stable output.
  std::map<std::string, std::string> extra;

  void observe(const Rational& v);
  friend bool operator==(const VerdictStats&, const VerdictStats&) = default;
};

struct PropertyVerdict {
  std::string property;
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::vector<Witness> witnesses;
  VerdictStats stats;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  friend bool operator==(const PropertyVerdict&, const PropertyVerdict&) = default;
};

}  // namespace gossez
