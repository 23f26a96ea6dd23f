#include "gossez/json_io.hpp"

#include <stdexcept>
#include <string>

namespace gossez {

using nlohmann::json;

json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

namespace {

json rational_array(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(rational_json(v));
  return arr;
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace

void to_json(json& j, const SparseSeq& x) {
  json entries = json::array();
  for (const auto& [n, v] : x.entries()) entries.push_back(json::array({n, rational_json(v)}));
  j = json{{"entries", std::move(entries)}};
}

void from_json(const json& j, SparseSeq& x) {
  std::map<Index, Rational> entries;
  for (const auto& e : j.at("entries")) {
    const auto n = e.at(0).get<Index>();
    if (!entries.emplace(n, rational_from_json(e.at(1))).second) {
      throw std::invalid_argument("duplicate sequence index " + std::to_string(n));
    }
  }
  x = SparseSeq{std::move(entries)};
}

void to_json(json& j, const TailSeq& y) {
  j = json{{"head", rational_array(y.head())},
           {"tail",
            {{"kind", y.has_constant_tail() ? "const" : "periodic"},
             {"values", rational_array(y.pattern())}}}};
}

void from_json(const json& j, TailSeq& y) {
  const auto& tail = j.at("tail");
  const auto kind = tail.at("kind").get<std::string>();
  auto values = rationals_from(tail.at("values"));
  if (kind == "const" && values.size() != 1) {
    throw std::invalid_argument("constant tail needs exactly one value");
  }
  if (kind != "const" && kind != "periodic") throw std::invalid_argument("unknown tail kind " + kind);
  y = TailSeq(rationals_from(j.at("head")), std::move(values));
}

void to_json(json& j, const ModelMeasure& mu) {
  j = json{{"atomic", mu.atomic}, {"infinity_mass", rational_json(mu.infinity_mass)}};
}

void from_json(const json& j, ModelMeasure& mu) {
  mu.atomic = j.at("atomic").get<SparseSeq>();
  mu.infinity_mass = rational_from_json(j.at("infinity_mass"));
}

void to_json(json& j, const PairPoint& z) {
  j = json{{"system", std::string{to_string(z.system())}}, {"y", z.y()}};
  if (z.system() == DualSystem::First) {
    j["x"] = z.x_seq();
  } else {
    j["x"] = z.x_measure();
  }
}

void from_json(const json& j, PairPoint& z) {
  const DualSystem system = parse_dual_system(j.at("system").get<std::string>());
  TailSeq y = j.at("y").get<TailSeq>();
  if (system == DualSystem::First) {
    z = PairPoint::first(j.at("x").get<SparseSeq>(), std::move(y));
  } else {
    z = PairPoint::second(j.at("x").get<ModelMeasure>(), std::move(y));
  }
}

void to_json(json& j, const SampledGraph& g) {
  j = json{{"system", std::string{to_string(g.system())}},
           {"source", g.source()},
           {"points", g.points()},
           {"linear", g.linear()}};
}

SampledGraph sampled_graph_from_json(const json& j) {
  return SampledGraph(parse_dual_system(j.at("system").get<std::string>()),
                      j.at("source").get<std::string>(),
                      j.at("points").get<std::vector<PairPoint>>(), j.value("linear", false));
}

void to_json(json& j, const RangeCertificate& cert) {
  j = json{{"feasible", cert.feasible}};
  if (cert.preimage) j["preimage"] = *cert.preimage;
  if (!cert.feasible) j["obstruction"] = cert.obstruction;
}

void to_json(json& j, const Witness& w) {
  json values = json::object();
  for (const auto& [k, v] : w.values) values[k] = rational_json(v);
  j = json{{"kind", w.kind}, {"points", w.points}, {"values", std::move(values)}};
  if (!w.note.empty()) j["note"] = w.note;
}

void from_json(const json& j, Witness& w) {
  w.kind = j.at("kind").get<std::string>();
  w.points = j.at("points").get<std::vector<PairPoint>>();
  w.values.clear();
  for (const auto& [k, v] : j.at("values").items()) w.values.emplace(k, rational_from_json(v));
  w.note = j.value("note", "");
}

void to_json(json& j, const PropertyVerdict& v) {
  json stats = json::object();
  stats["pairs_checked"] = v.stats.checked;
  stats["skipped"] = v.stats.skipped;
  if (v.stats.min_value) stats["min_value"] = rational_json(*v.stats.min_value);
  if (v.stats.max_value) stats["max_value"] = rational_json(*v.stats.max_value);
  for (const auto& [k, val] : v.stats.extra) stats[k] = val;
  j = json{{"property", v.property},
           {"status", std::string{to_string(v.status)}},
           {"stats", std::move(stats)},
           {"seed", v.seed}};
  if (!v.witnesses.empty()) j["witness"] = v.witnesses;
  if (!v.notes.empty()) j["notes"] = v.notes;
}

void from_json(const json& j, PropertyVerdict& v) {
  v.property = j.at("property").get<std::string>();
  v.status = parse_verdict_status(j.at("status").get<std::string>());
  v.seed = j.at("seed").get<std::uint64_t>();
  v.witnesses = j.contains("witness") ? j.at("witness").get<std::vector<Witness>>()
                                      : std::vector<Witness>{};
  v.notes = j.value("notes", std::vector<std::string>{});
  v.stats = VerdictStats{};
  for (const auto& [k, val] : j.at("stats").items()) {
    if (k == "pairs_checked") {
      v.stats.checked = val.get<std::uint64_t>();
    } else if (k == "skipped") {
      v.stats.skipped = val.get<std::uint64_t>();
    } else if (k == "min_value") {
      v.stats.min_value = rational_from_json(val);
    } else if (k == "max_value") {
      v.stats.max_value = rational_from_json(val);
    } else {
      v.stats.extra[k] = val.get<std::string>();
    }
  }
}

}  // namespace gossez
