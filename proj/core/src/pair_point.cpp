#include "gossez/pair_point.hpp"

#include <string>

#include "gossez/errors.hpp"
#include "gossez/model_dual.hpp"

namespace gossez {

std::string_view to_string(DualSystem system) {
  return system == DualSystem::First ? "first" : "second";
}

DualSystem parse_dual_system(std::string_view text) {
  if (text == "first") return DualSystem::First;
  if (text == "second") return DualSystem::Second;
  throw std::invalid_argument("unknown dual system: " + std::string{text});
}

const SparseSeq& PairPoint::x_seq() const {
  if (const auto* x = std::get_if<SparseSeq>(&x_)) return *x;
  throw SystemMismatch("point is not in the first dual system");
}

const ModelMeasure& PairPoint::x_measure() const {
  if (const auto* mu = std::get_if<ModelMeasure>(&x_)) return *mu;
  throw SystemMismatch("point is not in the second dual system");
}

ModelMeasure PairPoint::x_as_measure() const {
  if (const auto* x = std::get_if<SparseSeq>(&x_)) return ModelMeasure::atoms(*x);
  return std::get<ModelMeasure>(x_);
}

PairPoint PairPoint::embedded() const { return PairPoint::second(x_as_measure(), y_); }

PairPoint& PairPoint::operator+=(const PairPoint& other) {
  if (system() != other.system()) throw SystemMismatch("adding points of different systems");
  if (system() == DualSystem::First) {
    std::get<SparseSeq>(x_) += other.x_seq();
  } else {
    std::get<ModelMeasure>(x_) += other.x_measure();
  }
  y_ += other.y_;
  return *this;
}

PairPoint& PairPoint::operator-=(const PairPoint& other) {
  if (system() != other.system()) throw SystemMismatch("subtracting points of different systems");
  if (system() == DualSystem::First) {
    std::get<SparseSeq>(x_) -= other.x_seq();
  } else {
    std::get<ModelMeasure>(x_) -= other.x_measure();
  }
  y_ -= other.y_;
  return *this;
}

PairPoint& PairPoint::operator*=(const Rational& scale) {
  std::visit([&](auto& x) { x *= scale; }, x_);
  y_ *= scale;
  return *this;
}

Rational eval_c(const PairPoint& z) {
  if (z.system() == DualSystem::First) return couple(z.x_seq(), z.y());
  return pair_measure(z.x_measure(), z.y());
}

Rational natural_couple(const PairPoint& z, const PairPoint& w) {
  if (z.system() != w.system()) throw SystemMismatch("natural coupling across dual systems");
  if (z.system() == DualSystem::First) {
    return couple(z.x_seq(), w.y()) + couple(w.x_seq(), z.y());
  }
  return pair_measure(z.x_measure(), w.y()) + pair_measure(w.x_measure(), z.y());
}

}  // namespace gossez
