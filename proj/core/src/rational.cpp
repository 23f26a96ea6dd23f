#include "gossez/rational.hpp"

#include <stdexcept>

namespace gossez {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r{mpz_class{std::to_string(num)}, mpz_class{std::to_string(den)}};
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const std::string s{text};
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  mpz_class n{num[0] == '+' ? num.substr(1) : num};
  mpz_class d{den};
  if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  Rational r{n, d};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace gossez
