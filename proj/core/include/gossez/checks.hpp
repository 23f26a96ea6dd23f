#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gossez/report.hpp"
#include "gossez/verdict.hpp"

namespace gossez {

/// One named check of the catalog, with the mathematical statement it
/// exercises and the status it must reach.
struct CatalogEntry {
  std::string name;
  std::vector<std::string> claims;
  std::string anchor;
  VerdictStatus expected;
};

/// Claim identifiers covered by the catalog. Each appears in exactly one
/// catalog entry.
const std::vector<std::string>& claim_manifest();

/// The check catalog in execution order.
const std::vector<CatalogEntry>& check_catalog();

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs the selected checks ("all" expands to the full catalog, in catalog
/// order). Throws UnknownCheck for names outside the catalog.
ReportDoc run_checks(const CheckConfig& config);

}  // namespace gossez
