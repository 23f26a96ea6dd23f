#include "gossez/fitzpatrick.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gossez/errors.hpp"
#include "gossez/model_dual.hpp"
#include "gossez/operator_g.hpp"

namespace gossez {

// SampledGraph

SampledGraph::SampledGraph(DualSystem system, std::string source, std::vector<PairPoint> points,
                           bool linear)
    : system_(system), source_(std::move(source)), linear_(linear) {
  for (const auto& p : points) add(p);
}

bool SampledGraph::contains(const PairPoint& z) const {
  return std::find(points_.begin(), points_.end(), z) != points_.end();
}

void SampledGraph::add(const PairPoint& z) {
  if (z.system() != system_) throw SystemMismatch("sample point has the wrong system tag");
  if (!contains(z)) points_.push_back(z);
}

SampledGraph SampledGraph::embedded() const {
  if (system_ == DualSystem::Second) return *this;
  std::vector<PairPoint> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(p.embedded());
  return SampledGraph(DualSystem::Second, source_, std::move(pts), linear_);
}

PairPoint neg_transform(const PairPoint& z) {
  if (z.system() == DualSystem::First) return PairPoint::first(z.x_seq(), -z.y());
  return PairPoint::second(z.x_measure(), -z.y());
}

SampledGraph neg_transform(const SampledGraph& graph) {
  std::vector<PairPoint> pts;
  pts.reserve(graph.size());
  for (const auto& p : graph.points()) pts.push_back(neg_transform(p));
  const std::string& src = graph.source();
  // Double negation restores the original label.
  std::string label = src.starts_with("neg(") && src.ends_with(")")
                          ? src.substr(4, src.size() - 5)
                          : "neg(" + src + ")";
  return SampledGraph(graph.system(), std::move(label), std::move(pts), graph.linear());
}

// Coupling-based functions

ExtendedValue eval_cA(const PairPoint& z, const SampledGraph& graph) {
  if (!graph.contains(z)) return ExtendedValue::plus_infinity();
  return eval_c(z);
}

ExtendedValue fitz_sampled(const PairPoint& z, const SampledGraph& graph) {
  if (z.system() != graph.system()) throw SystemMismatch("point and graph in different systems");
  ExtendedValue best = ExtendedValue::minus_infinity();
  for (const auto& w : graph.points()) {
    ExtendedValue v{Rational{natural_couple(z, w) - eval_c(w)}};
    if (v > best) best = std::move(v);
  }
  return best;
}

namespace {

ExtendedValue indicator(bool member) {
  return member ? ExtendedValue{0} : ExtendedValue::plus_infinity();
}

const ModelMeasure& require_second(const PairPoint& z) {
  if (z.system() != DualSystem::Second) throw SystemMismatch("expected a second-system point");
  return z.x_measure();
}

bool on_embedded_graph_G(const PairPoint& z) {
  const auto& mu = require_second(z);
  return mu.infinity_mass == 0 && z.y() == apply_G(mu.atomic);
}

}  // namespace

ExtendedValue fitz_closed_first(const PairPoint& z) {
  if (z.system() != DualSystem::First) throw SystemMismatch("expected a first-system point");
  return indicator(z.y() == apply_G(z.x_seq()));
}

ExtendedValue fitz_closed_second_G(const PairPoint& z) {
  const auto& mu = require_second(z);
  return indicator(z.y() == TailSeq::constant(mu.infinity_mass) + apply_G(mu.atomic));
}

ExtendedValue fitz_closed_second_negG(const PairPoint& z) {
  return indicator(z.y() == apply_Gstar(require_second(z)));
}

std::string_view to_string(OperatorId op) {
  switch (op) {
    case OperatorId::GFirst:
      return "G-first";
    case OperatorId::GSecond:
      return "G-second";
    case OperatorId::NegGSecond:
      return "negG-second";
  }
  return "G-first";
}

OperatorId parse_operator_id(std::string_view text) {
  if (text == "G-first") return OperatorId::GFirst;
  if (text == "G-second") return OperatorId::GSecond;
  if (text == "negG-second") return OperatorId::NegGSecond;
  throw std::invalid_argument("unknown operator id: " + std::string{text});
}

DualSystem system_of(OperatorId op) {
  return op == OperatorId::GFirst ? DualSystem::First : DualSystem::Second;
}

ExtendedValue fitz_closed(OperatorId op, const PairPoint& z) {
  switch (op) {
    case OperatorId::GFirst:
      return fitz_closed_first(z);
    case OperatorId::GSecond:
      return fitz_closed_second_G(z);
    case OperatorId::NegGSecond:
      return fitz_closed_second_negG(z);
  }
  throw std::invalid_argument("unknown operator id");
}

// RepresentedFunction

RepresentedFunction RepresentedFunction::indicator_graph_G(DualSystem system) {
  return RepresentedFunction(Kind::IndicatorGraphG, system);
}

RepresentedFunction RepresentedFunction::indicator_graph_negGstar() {
  return RepresentedFunction(Kind::IndicatorGraphNegGstar, DualSystem::Second);
}

RepresentedFunction RepresentedFunction::indicator_closure() {
  return RepresentedFunction(Kind::IndicatorClosure, DualSystem::Second);
}

RepresentedFunction RepresentedFunction::coupling_plus_indicator(SampledGraph graph) {
  RepresentedFunction f(Kind::CouplingPlusIndicator, graph.system());
  f.graph_ = std::move(graph);
  return f;
}

RepresentedFunction RepresentedFunction::fitzpatrick_sampled(SampledGraph graph) {
  RepresentedFunction f(Kind::FitzpatrickSampled, graph.system());
  f.graph_ = std::move(graph);
  return f;
}

RepresentedFunction RepresentedFunction::fitzpatrick_closed_form(OperatorId op) {
  RepresentedFunction f(Kind::FitzpatrickClosedForm, system_of(op));
  f.op_ = op;
  return f;
}

std::string RepresentedFunction::name() const {
  switch (kind_) {
    case Kind::IndicatorGraphG:
      return std::string{"iota[Graph G]/"} + std::string{to_string(system_)};
    case Kind::IndicatorGraphNegGstar:
      return "iota[Graph negG*]";
    case Kind::IndicatorClosure:
      return "iota[cl Graph G] (model)";
    case Kind::CouplingPlusIndicator:
      return "c_A[" + graph_->source() + "]";
    case Kind::FitzpatrickSampled:
      return "fitz_sampled[" + graph_->source() + "]";
    case Kind::FitzpatrickClosedForm:
      return "fitz_closed[" + std::string{to_string(op_)} + "]";
  }
  return "unknown";
}

ExtendedValue RepresentedFunction::operator()(const PairPoint& input) const {
  if (input.system() != system_ && system_ == DualSystem::First) {
    throw SystemMismatch("second-system point given to a first-system function");
  }
  const PairPoint z = input.system() == system_ ? input : input.embedded();
  switch (kind_) {
    case Kind::IndicatorGraphG:
      if (system_ == DualSystem::First) return fitz_closed_first(z);
      return indicator(on_embedded_graph_G(z));
    case Kind::IndicatorGraphNegGstar:
      return fitz_closed_second_G(z);
    case Kind::IndicatorClosure:
      return indicator(on_embedded_graph_G(z));
    case Kind::CouplingPlusIndicator:
      return eval_cA(z, *graph_);
    case Kind::FitzpatrickSampled:
      return fitz_sampled(z, *graph_);
    case Kind::FitzpatrickClosedForm:
      return fitz_closed(op_, z);
  }
  throw std::logic_error("unhandled function kind");
}

// TruncatedSubspace

namespace {

struct Layout {
  Index n;
  bool second;
  std::size_t x(Index k) const { return k - 1; }
  std::size_t mass() const { return n; }
  std::size_t y(Index k) const { return n + (second ? 1 : 0) + (k - 1); }
  std::size_t tail() const { return 2 * n + (second ? 1 : 0); }
  std::size_t size() const { return tail() + 1; }
};

Layout layout_for(DualSystem system, Index truncation) {
  return Layout{truncation, system == DualSystem::Second};
}

}  // namespace

TruncatedSubspace::TruncatedSubspace(DualSystem system, Index truncation,
                                     std::vector<linalg::Vector> basis)
    : system_(system), truncation_(truncation), basis_(std::move(basis)) {
  for (const auto& v : basis_) {
    if (v.size() != ambient_dimension()) throw std::invalid_argument("basis vector length mismatch");
  }
}

std::size_t TruncatedSubspace::ambient_dimension() const {
  return layout_for(system_, truncation_).size();
}

std::optional<linalg::Vector> TruncatedSubspace::coordinates(const PairPoint& input) const {
  if (input.system() == DualSystem::Second && system_ == DualSystem::First) return std::nullopt;
  const PairPoint z = input.system() == system_ ? input : input.embedded();
  const Layout lay = layout_for(system_, truncation_);
  const ModelMeasure mu = z.x_as_measure();
  if (mu.atomic.max_index() > truncation_) return std::nullopt;
  const auto tail = limit(z.y());
  if (!tail || z.y().head().size() > truncation_) return std::nullopt;

  linalg::Vector coords(lay.size(), Rational{0});
  for (const auto& [k, v] : mu.atomic.entries()) coords[lay.x(k)] = v;
  if (lay.second) coords[lay.mass()] = mu.infinity_mass;
  for (Index k = 1; k <= truncation_; ++k) coords[lay.y(k)] = z.y().at(k);
  coords[lay.tail()] = *tail;
  return coords;
}

PairPoint TruncatedSubspace::point(const linalg::Vector& coords) const {
  const Layout lay = layout_for(system_, truncation_);
  if (coords.size() != lay.size()) throw std::invalid_argument("coordinate vector length mismatch");
  std::map<Index, Rational> xs;
  std::vector<Rational> head;
  for (Index k = 1; k <= truncation_; ++k) {
    xs.emplace(k, coords[lay.x(k)]);
    head.push_back(coords[lay.y(k)]);
  }
  TailSeq y = TailSeq::constant(coords[lay.tail()], std::move(head));
  if (lay.second) {
    return PairPoint::second(ModelMeasure{SparseSeq{std::move(xs)}, coords[lay.mass()]},
                             std::move(y));
  }
  return PairPoint::first(SparseSeq{std::move(xs)}, std::move(y));
}

std::vector<PairPoint> TruncatedSubspace::basis_points() const {
  std::vector<PairPoint> pts;
  pts.reserve(basis_.size());
  for (const auto& v : basis_) pts.push_back(point(v));
  return pts;
}

bool TruncatedSubspace::contains(const PairPoint& z) const {
  const auto coords = coordinates(z);
  if (!coords) throw std::out_of_range("point does not fit the truncation");
  return linalg::in_span(basis_, *coords);
}

TruncatedSubspace annihilator_truncated(std::span<const PairPoint> spanning, Index truncation,
                                        DualSystem system) {
  if (truncation == 0) throw std::invalid_argument("truncation must be positive");
  const Layout lay = layout_for(system, truncation);
  linalg::Matrix rows(spanning.size(), lay.size());
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    const PairPoint& raw = spanning[i];
    if (raw.system() == DualSystem::Second && system == DualSystem::First) {
      throw SystemMismatch("second-system spanning point in a first-system annihilator");
    }
    const PairPoint w = raw.system() == system ? raw : raw.embedded();
    const ModelMeasure u = w.x_as_measure();
    if (u.atomic.max_index() > truncation) {
      throw std::out_of_range("spanning point supported past the truncation");
    }
    // z.w = sum_{k<=N} x_k v_k + a_z lim v + sum_k u_k y_k + a_w t
    for (Index k = 1; k <= truncation; ++k) rows(i, lay.x(k)) = w.y().at(k);
    for (const auto& [k, v] : u.atomic.entries()) rows(i, lay.y(k)) = v;
    if (lay.second) {
      const auto lim = limit(w.y());
      if (!lim) throw OutsideModelDomain("spanning point has a second component without limit");
      rows(i, lay.mass()) = *lim;
      rows(i, lay.tail()) = u.infinity_mass;
    }
  }
  return TruncatedSubspace(system, truncation, linalg::nullspace(std::move(rows)));
}

PropertyVerdict orthogonality_report(const SampledGraph& reference, const SampledGraph& tested) {
  const bool mixed = reference.system() != tested.system();
  const SampledGraph a = mixed ? reference.embedded() : reference;
  const SampledGraph b = mixed ? tested.embedded() : tested;

  PropertyVerdict verdict{.property = "orthogonality"};
  std::uint64_t violations = 0;
  for (const auto& z : b.points()) {
    for (const auto& w : a.points()) {
      Rational v;
      try {
        v = natural_couple(z, w);
      } catch (const OutsideModelDomain&) {
        ++verdict.stats.skipped;
        continue;
      }
      ++verdict.stats.checked;
      verdict.stats.observe(v);
      if (v != 0 && violations++ == 0) {
        verdict.witnesses.push_back(
            Witness{.kind = "orthogonality-violation", .points = {z, w}, .values = {{"pairing", v}}});
      }
    }
  }
  verdict.stats.extra["violations"] = std::to_string(violations);
  verdict.stats.extra["reference"] = a.source();
  verdict.stats.extra["tested"] = b.source();
  if (violations > 0) {
    verdict.status = VerdictStatus::Refuted;
  } else if (verdict.stats.skipped > 0) {
    verdict.status = VerdictStatus::Inconclusive;
  } else {
    verdict.status = VerdictStatus::VerifiedOnSamples;
  }
  return verdict;
}

}  // namespace gossez
