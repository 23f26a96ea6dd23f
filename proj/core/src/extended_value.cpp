#include "gossez/extended_value.hpp"

#include <stdexcept>

namespace gossez {

const Rational& ExtendedValue::value() const {
  if (!is_finite()) throw std::logic_error("infinite extended value has no finite part");
  return value_;
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_finite() && b.is_finite()) return ExtendedValue{Rational{a.value_ + b.value_}};
  if ((a.is_plus_infinity() && b.is_minus_infinity()) ||
      (a.is_minus_infinity() && b.is_plus_infinity())) {
    throw std::domain_error("+inf + -inf is undefined");
  }
  return a.is_finite() ? b : a;
}

std::string to_string(const ExtendedValue& value) {
  switch (value.kind()) {
    case ExtendedValue::Kind::PlusInfinity:
      return "+inf";
    case ExtendedValue::Kind::MinusInfinity:
      return "-inf";
    case ExtendedValue::Kind::Finite:
      break;
  }
  return to_string(value.value());
}

}  // namespace gossez
