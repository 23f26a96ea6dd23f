#include "gossez/monotone.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gossez/errors.hpp"
#include "gossez/model_dual.hpp"
#include "gossez/operator_g.hpp"

namespace gossez {

namespace {

void settle(PropertyVerdict& verdict, bool violated) {
  if (violated) {
    verdict.status = VerdictStatus::Refuted;
  } else if (verdict.stats.skipped > 0) {
    verdict.status = VerdictStatus::Inconclusive;
  } else {
    verdict.status = VerdictStatus::VerifiedOnSamples;
  }
}

std::string count_str(std::uint64_t n) { return std::to_string(n); }

}  // namespace

std::vector<Rational> scale_ladder(const Rational& max) {
  if (max < 1) throw std::invalid_argument("scale ladder maximum must be at least 1");
  std::vector<Rational> ladder;
  for (Rational s = 1; s < max; s *= 10) ladder.push_back(s);
  ladder.push_back(max);
  return ladder;
}

std::optional<bool> on_analytic_graph(const std::string& source, const PairPoint& z) {
  const ModelMeasure mu = z.x_as_measure();
  if (source == "Graph G") return mu.infinity_mass == 0 && z.y() == apply_G(mu.atomic);
  if (source == "Graph negG") return mu.infinity_mass == 0 && z.y() == apply_negG(mu.atomic);
  return std::nullopt;
}

PropertyVerdict is_monotone(const SampledGraph& graph) {
  PropertyVerdict verdict{.property = "monotone"};
  const auto& pts = graph.points();
  bool violated = false;
  for (std::size_t i = 0; i < pts.size() && !violated; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rational v;
      try {
        v = eval_c(pts[i] - pts[j]);
      } catch (const OutsideModelDomain&) {
        ++verdict.stats.skipped;
        continue;
      }
      ++verdict.stats.checked;
      verdict.stats.observe(v);
      if (v < 0) {
        verdict.witnesses.push_back(Witness{.kind = "monotone-violation",
                                            .points = {pts[i], pts[j]},
                                            .values = {{"coupling", v}}});
        violated = true;
        break;
      }
    }
  }
  verdict.stats.extra["samples"] = count_str(pts.size());
  verdict.stats.extra["source"] = graph.source();
  settle(verdict, violated);
  return verdict;
}

PropertyVerdict extension_probe(const SampledGraph& input, const PairPoint& z,
                                const Rational& scale_max) {
  if (input.system() == DualSystem::Second && z.system() == DualSystem::First) {
    throw SystemMismatch("first-system probe against a second-system graph");
  }
  const SampledGraph graph = input.system() == z.system() ? input : input.embedded();

  PropertyVerdict verdict{.property = "extension"};
  std::vector<Rational> scales{Rational{1}};
  if (graph.linear()) {
    scales.clear();
    for (const auto& s : scale_ladder(scale_max)) {
      scales.push_back(s);
      scales.push_back(-s);
    }
  }
  verdict.stats.extra["scale_max"] = graph.linear() ? to_string(scale_max) : "1";
  verdict.stats.extra["source"] = graph.source();

  std::optional<PairPoint> closest;
  bool violated = false;
  for (const auto& s : scales) {
    for (const auto& w : graph.points()) {
      const PairPoint sw = s * w;
      Rational v;
      try {
        v = eval_c(z - sw);
      } catch (const OutsideModelDomain&) {
        ++verdict.stats.skipped;
        continue;
      }
      ++verdict.stats.checked;
      if (!verdict.stats.min_value || v < *verdict.stats.min_value) closest = sw;
      verdict.stats.observe(v);
      if (v < 0) {
        verdict.witnesses.push_back(Witness{.kind = "extension-violation",
                                            .points = {z, sw},
                                            .values = {{"coupling", v}, {"scale", s}}});
        violated = true;
        break;
      }
    }
    if (violated) break;
  }

  if (violated) {
    verdict.status = VerdictStatus::Refuted;
    return verdict;
  }
  if (verdict.stats.skipped > 0 || graph.empty()) {
    verdict.status = VerdictStatus::Inconclusive;
    return verdict;
  }
  if (graph.contains(z)) {
    verdict.status = VerdictStatus::Inconclusive;
    verdict.notes.push_back("probe point already in the sample");
    return verdict;
  }
  verdict.status = VerdictStatus::WitnessFound;
  Witness witness{.kind = "extension",
                  .points = {z, *closest},
                  .values = {{"min_coupling", *verdict.stats.min_value}}};
  if (on_analytic_graph(graph.source(), z).value_or(false)) {
    witness.note = "already in analytic graph";
  }
  verdict.witnesses.push_back(std::move(witness));
  return verdict;
}

PropertyVerdict ni_witness_search(OperatorId op, const ProbeSet& probes) {
  if (probes.system != system_of(op)) throw SystemMismatch("probe set in the wrong system");
  constexpr std::size_t kKeptWitnesses = 5;
  PropertyVerdict verdict{.property = "NI", .seed = probes.generation.seed};
  std::uint64_t found = 0;
  std::uint64_t margin_matches_mass = 0;
  for (const auto& z : probes.points) {
    Rational c;
    try {
      c = eval_c(z);
    } catch (const OutsideModelDomain&) {
      ++verdict.stats.skipped;
      continue;
    }
    ++verdict.stats.checked;
    const ExtendedValue f = fitz_closed(op, z);
    if (f.is_finite()) verdict.stats.observe(Rational{c - f.value()});
    if (f < ExtendedValue{c}) {
      ++found;
      const Rational margin = c - f.value();
      const Rational a = z.x_as_measure().infinity_mass;
      if (margin == a * a) ++margin_matches_mass;
      if (verdict.witnesses.size() < kKeptWitnesses) {
        verdict.witnesses.push_back(
            Witness{.kind = "NI",
                    .points = {z},
                    .values = {{"fitzpatrick", f.value()}, {"c", c}, {"margin", margin}},
                    .note = "op=" + std::string{to_string(op)}});
      }
    }
  }
  verdict.stats.extra["operator"] = std::string{to_string(op)};
  verdict.stats.extra["witnesses"] = count_str(found);
  verdict.stats.extra["margin_equals_mass_squared"] = count_str(margin_matches_mass);
  verdict.status = found > 0 ? VerdictStatus::WitnessFound : VerdictStatus::VerifiedOnSamples;
  if (found == 0 && verdict.stats.checked == 0) verdict.status = VerdictStatus::Inconclusive;
  return verdict;
}

PropertyVerdict representability_check(const RepresentedFunction& f, const SampledGraph& graph,
                                       const ProbeSet& probes, std::size_t convexity_pairs) {
  PropertyVerdict verdict{.property = "representable", .seed = probes.generation.seed};
  verdict.stats.extra["function"] = f.name();
  bool violated = false;
  auto fail = [&](std::string kind, std::vector<PairPoint> pts,
                  std::map<std::string, Rational> values, std::string note) {
    if (!violated) {
      verdict.witnesses.push_back(Witness{std::move(kind), std::move(pts), std::move(values),
                                          std::move(note)});
    }
    violated = true;
  };

  // (a) f = c on the graph.
  for (const auto& z : graph.points()) {
    const ExtendedValue fz = f(z);
    const Rational c = eval_c(z);
    ++verdict.stats.checked;
    if (!fz.is_finite() || fz.value() != c) {
      fail("off-equality-set", {z}, {{"c", c}}, "f(z) = " + to_string(fz));
    }
  }

  // (b) f >= c on probes; collect the equality set.
  std::uint64_t equality = 0;
  std::uint64_t equality_off_graph = 0;
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < probes.points.size(); ++i) {
    const PairPoint& z = probes.points[i];
    Rational c;
    ExtendedValue fz = ExtendedValue::plus_infinity();
    try {
      c = eval_c(z);
      fz = f(z);
    } catch (const OutsideModelDomain&) {
      ++verdict.stats.skipped;
      continue;
    }
    ++verdict.stats.checked;
    if (fz.is_finite()) {
      finite.push_back(i);
      verdict.stats.observe(Rational{fz.value() - c});
    }
    if (fz < ExtendedValue{c}) {
      fail("below-coupling", {z}, {{"f", fz.value()}, {"c", c}}, "");
    } else if (fz == ExtendedValue{c}) {
      ++equality;
      if (!on_analytic_graph(graph.source(), z).value_or(true)) ++equality_off_graph;
    }
  }

  // (c) midpoint convexity where both endpoint values are finite.
  Rng rng(probes.generation.seed ^ 0x5eedc0de);
  std::uint64_t convexity_checked = 0;
  const Rational half = make_rational(1, 2);
  for (std::size_t k = 0; k < convexity_pairs && finite.size() >= 2; ++k) {
    const PairPoint& z1 = probes.points[finite[rng.below(finite.size())]];
    const PairPoint& z2 = probes.points[finite[rng.below(finite.size())]];
    const PairPoint mid = half * (z1 + z2);
    ExtendedValue fm = ExtendedValue::plus_infinity();
    try {
      fm = f(mid);
    } catch (const OutsideModelDomain&) {
      ++verdict.stats.skipped;
      continue;
    }
    ++convexity_checked;
    const Rational bound = half * (f(z1).value() + f(z2).value());
    if (fm > ExtendedValue{bound}) {
      fail("convexity-violation", {z1, z2}, {{"midpoint_bound", bound}}, "f(mid) = " + to_string(fm));
    }
  }

  verdict.stats.extra["equality_set_size"] = count_str(equality);
  verdict.stats.extra["equality_set_off_graph"] = count_str(equality_off_graph);
  verdict.stats.extra["convexity_pairs"] = count_str(convexity_checked);
  verdict.stats.extra["graph_samples"] = count_str(graph.size());
  verdict.status = violated ? VerdictStatus::Refuted : VerdictStatus::VerifiedOnSamples;
  return verdict;
}

namespace {

enum class Maximality { Expected, Refutable, NotWitnessableInModel };

struct ExpectedProfile {
  bool ni;
  Maximality maximal;
  const char* summary;
};

ExpectedProfile expected_profile(OperatorId op) {
  switch (op) {
    case OperatorId::GFirst:
      return {true, Maximality::Expected, "maximal monotone"};
    case OperatorId::GSecond:
      return {false, Maximality::Refutable, "monotone, not NI, not maximal monotone"};
    case OperatorId::NegGSecond:
      return {true, Maximality::NotWitnessableInModel, "NI but not maximal monotone"};
  }
  throw std::invalid_argument("unknown operator id");
}

}  // namespace

PropertyVerdict dichotomy_crosscheck(OperatorId op, const CrosscheckConfig& config) {
  const ExpectedProfile expected = expected_profile(op);
  const DualSystem system = system_of(op);
  Rng rng(config.seed);
  const Index half = std::max<Index>(1, config.truncation / 2);
  const SeqShape shape{.max_index = half, .max_support = 4, .bound = 10};

  SampledGraph graph = op == OperatorId::NegGSecond
                           ? sample_graph_negG_second(rng, config.samples, shape, config.truncation)
                           : sample_graph_G(system, rng, config.samples, shape, config.truncation);
  ProbeSet probes = make_probe_grid(system, ProbeDescriptor{.seed = config.seed,
                                                            .truncation = half,
                                                            .coord_bound = 10,
                                                            .max_support = 4,
                                                            .count = config.probes});
  const PairPoint limit_point = PairPoint::second(ModelMeasure::at_infinity(1), ones());
  if (system == DualSystem::Second) probes.points.insert(probes.points.begin(), limit_point);

  const RepresentedFunction representative =
      op == OperatorId::GSecond ? RepresentedFunction::indicator_closure()
                                : RepresentedFunction::fitzpatrick_closed_form(op);

  const PropertyVerdict monotone = is_monotone(graph);
  const PropertyVerdict ni = ni_witness_search(op, probes);
  const PropertyVerdict rep = representability_check(representative, graph, probes, 100);

  // Candidate extension points.
  std::vector<PairPoint> candidates;
  if (system == DualSystem::First) {
    candidates = off_graph_points_first(rng, 30, half, 10);
  } else {
    candidates.push_back(limit_point);
    for (int i = 0; i < 10; ++i) {
      candidates.push_back(graph_negGstar_point(random_measure(rng, shape, true)));
      const ModelMeasure mu = random_measure(rng, shape, true);
      candidates.push_back(PairPoint::second(mu, apply_Gstar(mu)));
    }
  }
  std::uint64_t refuted = 0;
  std::uint64_t off_graph_witnesses = 0;
  std::uint64_t witnesses_in_negGstar = 0;
  std::uint64_t inconclusive = 0;
  std::optional<Witness> first_extension;
  for (const auto& z : candidates) {
    const PropertyVerdict ext = extension_probe(graph, z, config.scale_max);
    if (ext.status == VerdictStatus::Refuted) {
      ++refuted;
    } else if (ext.status == VerdictStatus::WitnessFound) {
      if (on_analytic_graph(graph.source(), z).value_or(false)) continue;
      ++off_graph_witnesses;
      if (system == DualSystem::Second && fitz_closed_second_G(z) == ExtendedValue{0}) {
        ++witnesses_in_negGstar;
      }
      if (!first_extension) first_extension = ext.witnesses.front();
    } else {
      ++inconclusive;
    }
  }

  PropertyVerdict verdict{.property = "dichotomy:" + std::string{to_string(op)},
                          .seed = config.seed};
  std::vector<std::string> failures;
  if (monotone.status != VerdictStatus::VerifiedOnSamples) failures.push_back("monotone");
  if (expected.ni && ni.status != VerdictStatus::VerifiedOnSamples) failures.push_back("NI expected");
  if (!expected.ni && ni.status != VerdictStatus::WitnessFound) failures.push_back("NI failure expected");
  if (rep.status != VerdictStatus::VerifiedOnSamples) failures.push_back("representative on model slice");
  switch (expected.maximal) {
    case Maximality::Expected:
      if (off_graph_witnesses > 0 || refuted != candidates.size()) {
        failures.push_back("off-graph candidates must all be refuted");
      }
      break;
    case Maximality::Refutable:
      if (off_graph_witnesses == 0) failures.push_back("extension witness expected");
      if (witnesses_in_negGstar != off_graph_witnesses) {
        failures.push_back("extension witnesses must lie on Graph negG*");
      }
      break;
    case Maximality::NotWitnessableInModel:
      verdict.notes.push_back(
          "non-maximality is carried by closure points outside the model; the model slice shows "
          "no extension witness and representability on the slice does not extend");
      break;
  }
  if (inconclusive > 0) failures.push_back("inconclusive extension probes");

  const bool ni_holds = ni.status == VerdictStatus::VerifiedOnSamples;
  std::string profile = "monotone";
  profile += ni_holds ? "+NI" : "+not-NI";
  profile += rep.status == VerdictStatus::VerifiedOnSamples ? "+representable-on-slice" : "+not-representable";
  profile += off_graph_witnesses > 0 ? "+extension-witness" : "+no-extension-witness";

  verdict.stats.checked = candidates.size();
  verdict.stats.extra["expected"] = expected.summary;
  verdict.stats.extra["profile"] = profile;
  verdict.stats.extra["monotone"] = std::string{to_string(monotone.status)};
  verdict.stats.extra["NI"] = std::string{to_string(ni.status)};
  verdict.stats.extra["representable"] = std::string{to_string(rep.status)};
  verdict.stats.extra["representative"] = representative.name();
  verdict.stats.extra["extension_refuted"] = count_str(refuted);
  verdict.stats.extra["extension_witnesses"] = count_str(off_graph_witnesses);
  verdict.stats.extra["extension_witnesses_on_negGstar"] = count_str(witnesses_in_negGstar);
  verdict.stats.extra["scale_max"] = to_string(config.scale_max);
  if (!ni.witnesses.empty()) verdict.witnesses.push_back(ni.witnesses.front());
  if (first_extension) verdict.witnesses.push_back(*first_extension);
  for (const auto& f : failures) verdict.notes.push_back("inconsistent: " + f);
  verdict.status = failures.empty() ? VerdictStatus::VerifiedOnSamples : VerdictStatus::Refuted;
  return verdict;
}

bool revalidate(const Witness& w) {
  if (w.kind == "monotone-violation") {
    const Rational v = eval_c(w.points.at(0) - w.points.at(1));
    return v == w.value("coupling") && v < 0;
  }
  if (w.kind == "extension-violation") {
    const Rational v = eval_c(w.points.at(0) - w.points.at(1));
    return v == w.value("coupling") && v < 0;
  }
  if (w.kind == "extension") {
    const Rational v = eval_c(w.points.at(0) - w.points.at(1));
    return v == w.value("min_coupling") && v >= 0;
  }
  if (w.kind == "orthogonality-violation") {
    const Rational v = natural_couple(w.points.at(0), w.points.at(1));
    return v == w.value("pairing") && v != 0;
  }
  if (w.kind == "NI") {
    const auto eq = w.note.find('=');
    if (eq == std::string::npos) return false;
    const OperatorId op = parse_operator_id(w.note.substr(eq + 1));
    const PairPoint& z = w.points.at(0);
    const ExtendedValue f = fitz_closed(op, z);
    const Rational c = eval_c(z);
    return f.is_finite() && f.value() == w.value("fitzpatrick") && c == w.value("c") &&
           Rational{c - f.value()} == w.value("margin") && f < ExtendedValue{c};
  }
  throw std::invalid_argument("no re-check available for witness kind " + w.kind);
}

}  // namespace gossez
