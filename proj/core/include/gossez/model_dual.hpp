#pragma once

#include "gossez/measure.hpp"
#include "gossez/pair_point.hpp"
#include "gossez/sequences.hpp"

namespace gossez {

/// <mu, y> = <atomic, y> + infinity_mass * lim y.
/// Throws OutsideModelDomain when infinity_mass != 0 and y has no limit.
Rational pair_measure(const ModelMeasure& mu, const TailSeq& y);

/// Adjoint of G on the model: G* mu = -a 1 - G(atomic), a = infinity_mass.
TailSeq apply_Gstar(const ModelMeasure& mu);

/// Model-restricted kernel test. Kernel measures that vanish on every atom
/// and at infinity without being zero are not representable here.
bool in_kernel_model(const ModelMeasure& mu);

/// The SECOND-system point (mu, -G* mu) = (mu, a 1 + G(atomic)).
PairPoint graph_negGstar_point(const ModelMeasure& mu);

}  // namespace gossez
