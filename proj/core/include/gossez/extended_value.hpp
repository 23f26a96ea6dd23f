#pragma once

#include <compare>
#include <string>

#include "gossez/rational.hpp"

namespace gossez {

/// An element of the extended real line with exact finite values.
class ExtendedValue {
 public:
  enum class Kind { MinusInfinity, Finite, PlusInfinity };

  ExtendedValue(const Rational& value) : kind_(Kind::Finite), value_(value) {}  // NOLINT
  ExtendedValue(int value) : kind_(Kind::Finite), value_(value) {}              // NOLINT

  static ExtendedValue plus_infinity() { return ExtendedValue(Kind::PlusInfinity); }
  static ExtendedValue minus_infinity() { return ExtendedValue(Kind::MinusInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }
  bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }

  /// Throws std::logic_error for infinite values.
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// Sum with +inf absorbing -inf is rejected: throws std::domain_error.
  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b);

 private:
  explicit ExtendedValue(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_ = 0;
};

/// "+inf", "-inf" or the canonical "p/q" form.
std::string to_string(const ExtendedValue& value);

}  // namespace gossez
