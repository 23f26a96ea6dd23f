#pragma once

#include <initializer_list>
#include <vector>

#include "gossez/rational.hpp"
#include "gossez/sequences.hpp"

namespace gossez::test {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline std::vector<Rational> values(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long v : xs) out.emplace_back(v);
  return out;
}

inline SparseSeq seq(std::initializer_list<long> xs) {
  const auto v = values(xs);
  return SparseSeq::from_values(v);
}

inline SparseSeq e(Index n) { return SparseSeq::unit(n); }

// Seeds for property tests; each test draws its own stream.
inline constexpr std::size_t kTrials = 1000;

}  // namespace gossez::test
