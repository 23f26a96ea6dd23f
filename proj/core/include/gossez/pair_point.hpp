#pragma once

#include <string_view>
#include <variant>

#include "gossez/measure.hpp"
#include "gossez/sequences.hpp"

namespace gossez {

/// FIRST pairs l1 with l-infinity; SECOND pairs the dual of l-infinity
/// (modeled by ModelMeasure) with l-infinity.
enum class DualSystem { First, Second };

std::string_view to_string(DualSystem system);
DualSystem parse_dual_system(std::string_view text);

/// A point z = (x, y) of Z = X x Y. The first component's representation
/// determines the system: SparseSeq for FIRST, ModelMeasure for SECOND.
class PairPoint {
 public:
  PairPoint() : x_(SparseSeq{}) {}

  static PairPoint first(SparseSeq x, TailSeq y) { return PairPoint(std::move(x), std::move(y)); }
  static PairPoint second(ModelMeasure mu, TailSeq y) {
    return PairPoint(std::move(mu), std::move(y));
  }

  DualSystem system() const {
    return std::holds_alternative<SparseSeq>(x_) ? DualSystem::First : DualSystem::Second;
  }

  /// Throws SystemMismatch when the point is not in the FIRST system.
  const SparseSeq& x_seq() const;
  /// Throws SystemMismatch when the point is not in the SECOND system.
  const ModelMeasure& x_measure() const;
  /// The first component as a measure; l1 embeds with zero mass at infinity.
  ModelMeasure x_as_measure() const;
  const TailSeq& y() const { return y_; }

  /// Canonical embedding of a FIRST point into the SECOND system.
  PairPoint embedded() const;

  PairPoint& operator+=(const PairPoint& other);
  PairPoint& operator-=(const PairPoint& other);
  PairPoint& operator*=(const Rational& scale);

  friend PairPoint operator+(PairPoint a, const PairPoint& b) { return a += b; }
  friend PairPoint operator-(PairPoint a, const PairPoint& b) { return a -= b; }
  friend PairPoint operator*(const Rational& s, PairPoint a) { return a *= s; }
  friend bool operator==(const PairPoint&, const PairPoint&) = default;

 private:
  PairPoint(std::variant<SparseSeq, ModelMeasure> x, TailSeq y)
      : x_(std::move(x)), y_(std::move(y)) {}

  std::variant<SparseSeq, ModelMeasure> x_;
  TailSeq y_;
};

/// The coupling c(z) = <x, y> in the point's own system. SECOND-system
/// evaluation throws OutsideModelDomain where the limit functional is undefined.
Rational eval_c(const PairPoint& z);

/// z . w = c(x_z, y_w) + c(x_w, y_z). Throws SystemMismatch across systems.
Rational natural_couple(const PairPoint& z, const PairPoint& w);

}  // namespace gossez
