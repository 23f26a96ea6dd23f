#pragma once

#include "gossez/rational.hpp"
#include "gossez/sequences.hpp"

namespace gossez {

/// Computable slice of the dual of l-infinity: point masses on the integers
/// (the atomic part) plus one scalar mass at infinity that acts as the limit
/// functional on convergent sequences.
struct ModelMeasure {
  SparseSeq atomic;
  Rational infinity_mass = 0;

  static ModelMeasure atoms(SparseSeq x) { return {std::move(x), 0}; }
  static ModelMeasure at_infinity(const Rational& a) { return {SparseSeq{}, a}; }

  bool is_zero() const { return atomic.is_zero() && infinity_mass == 0; }

  ModelMeasure& operator+=(const ModelMeasure& o) {
    atomic += o.atomic;
    infinity_mass += o.infinity_mass;
    return *this;
  }
  ModelMeasure& operator-=(const ModelMeasure& o) {
    atomic -= o.atomic;
    infinity_mass -= o.infinity_mass;
    return *this;
  }
  ModelMeasure& operator*=(const Rational& s) {
    atomic *= s;
    infinity_mass *= s;
    return *this;
  }

  friend ModelMeasure operator+(ModelMeasure a, const ModelMeasure& b) { return a += b; }
  friend ModelMeasure operator-(ModelMeasure a, const ModelMeasure& b) { return a -= b; }
  friend ModelMeasure operator-(ModelMeasure a) { return a *= Rational{-1}; }
  friend ModelMeasure operator*(const Rational& s, ModelMeasure a) { return a *= s; }
  friend bool operator==(const ModelMeasure&, const ModelMeasure&) = default;
};

}  // namespace gossez
