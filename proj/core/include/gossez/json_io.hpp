#pragma once

#include <nlohmann/json.hpp>

#include "gossez/extended_value.hpp"
#include "gossez/fitzpatrick.hpp"
#include "gossez/measure.hpp"
#include "gossez/operator_g.hpp"
#include "gossez/pair_point.hpp"
#include "gossez/sequences.hpp"
#include "gossez/verdict.hpp"

// Wire formats. Rationals travel as decimal strings "p/q".
//   SparseSeq     {"entries": [[n, "p/q"], ...]}            sorted by index
//   TailSeq       {"head": [...], "tail": {"kind": "const"|"periodic", "values": [...]}}
//   ModelMeasure  {"atomic": SparseSeq, "infinity_mass": "p/q"}
//   PairPoint     {"system": "first"|"second", "x": SparseSeq|ModelMeasure, "y": TailSeq}
//   SampledGraph  {"system": ..., "source": str, "points": [PairPoint, ...]}
//   RangeCertificate {"feasible": bool, "preimage": SparseSeq?, "obstruction": str?}
//   PropertyVerdict {"property", "status", "witness"?, "stats", "seed", "notes"?}
// Decoders throw nlohmann::json::exception or std::invalid_argument on
// malformed input.

namespace gossez {

void to_json(nlohmann::json& j, const SparseSeq& x);
void from_json(const nlohmann::json& j, SparseSeq& x);

void to_json(nlohmann::json& j, const TailSeq& y);
void from_json(const nlohmann::json& j, TailSeq& y);

void to_json(nlohmann::json& j, const ModelMeasure& mu);
void from_json(const nlohmann::json& j, ModelMeasure& mu);

void to_json(nlohmann::json& j, const PairPoint& z);
void from_json(const nlohmann::json& j, PairPoint& z);

void to_json(nlohmann::json& j, const SampledGraph& g);
SampledGraph sampled_graph_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const RangeCertificate& cert);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

void to_json(nlohmann::json& j, const PropertyVerdict& v);
void from_json(const nlohmann::json& j, PropertyVerdict& v);

nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace gossez
