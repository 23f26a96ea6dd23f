#include "gossez/model_dual.hpp"

#include "gossez/errors.hpp"
#include "gossez/operator_g.hpp"

namespace gossez {

Rational pair_measure(const ModelMeasure& mu, const TailSeq& y) {
  Rational value = couple(mu.atomic, y);
  if (mu.infinity_mass != 0) {
    const auto lim = limit(y);
    if (!lim) {
      throw OutsideModelDomain("mass at infinity paired with a sequence that has no limit");
    }
    value += mu.infinity_mass * *lim;
  }
  return value;
}

TailSeq apply_Gstar(const ModelMeasure& mu) {
  return TailSeq::constant(-mu.infinity_mass) - apply_G(mu.atomic);
}

bool in_kernel_model(const ModelMeasure& mu) { return mu.is_zero(); }

PairPoint graph_negGstar_point(const ModelMeasure& mu) {
  return PairPoint::second(mu, -apply_Gstar(mu));
}

}  // namespace gossez
