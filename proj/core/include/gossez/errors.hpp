#pragma once

#include <stdexcept>

namespace gossez {

/// A measure with mass at infinity was paired with a sequence that has no
/// limit. The limit functional is undefined there and no Banach-limit value
/// is substituted.
class OutsideModelDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two points from different dual systems were combined.
class SystemMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gossez
