#include "gossez/verdict.hpp"

#include <stdexcept>

namespace gossez {

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::VerifiedOnSamples:
      return "verified-on-samples";
    case VerdictStatus::Refuted:
      return "refuted";
    case VerdictStatus::WitnessFound:
      return "witness-found";
    case VerdictStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

VerdictStatus parse_verdict_status(std::string_view text) {
  if (text == "verified-on-samples") return VerdictStatus::VerifiedOnSamples;
  if (text == "refuted") return VerdictStatus::Refuted;
  if (text == "witness-found") return VerdictStatus::WitnessFound;
  if (text == "inconclusive") return VerdictStatus::Inconclusive;
  throw std::invalid_argument("unknown verdict status: " + std::string{text});
}

const Rational& Witness::value(std::string_view name) const {
  const auto it = values.find(std::string{name});
  if (it != values.end()) return it->second;
  throw std::out_of_range("witness has no value named " + std::string{name});
}

void VerdictStats::observe(const Rational& v) {
  if (!min_value || v < *min_value) min_value = v;
  if (!max_value || v > *max_value) max_value = v;
}

}  // namespace gossez
