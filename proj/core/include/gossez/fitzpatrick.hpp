#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gossez/exact_linalg.hpp"
#include "gossez/extended_value.hpp"
#include "gossez/pair_point.hpp"
#include "gossez/verdict.hpp"

namespace gossez {

/// Finite sample of a graph in Z = X x Y. Points share the system tag and
/// duplicates are dropped (first occurrence wins). `linear` marks samples of
/// a linear graph, where every scalar multiple of a sample is again in the
/// graph.
class SampledGraph {
 public:
  SampledGraph(DualSystem system, std::string source, std::vector<PairPoint> points = {},
               bool linear = false);

  DualSystem system() const { return system_; }
  const std::string& source() const { return source_; }
  const std::vector<PairPoint>& points() const { return points_; }
  bool linear() const { return linear_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  bool contains(const PairPoint& z) const;
  /// Appends z unless already present. Throws SystemMismatch on a foreign tag.
  void add(const PairPoint& z);
  /// Canonical embedding of a FIRST-system sample into the SECOND system.
  SampledGraph embedded() const;

  friend bool operator==(const SampledGraph&, const SampledGraph&) = default;

 private:
  DualSystem system_;
  std::string source_;
  std::vector<PairPoint> points_;
  bool linear_;
};

/// (x, y) -> (x, -y).
PairPoint neg_transform(const PairPoint& z);
SampledGraph neg_transform(const SampledGraph& graph);

/// c_A = c + iota_A: c(z) on A, +inf elsewhere (and everywhere when A is empty).
ExtendedValue eval_cA(const PairPoint& z, const SampledGraph& graph);

/// max over w in A of z.w - c(w); -inf for empty A. A lower bound for the
/// Fitzpatrick function of any graph containing the samples.
ExtendedValue fitz_sampled(const PairPoint& z, const SampledGraph& graph);

/// Closed forms for the skew linear graphs. Each is the indicator of a graph:
///   first     G  : 0 iff y = Gx
///   second    G  : 0 iff y = a 1 + G(atomic)   (the graph of neg G*)
///   second neg G : 0 iff y = G* mu             (the graph of G*)
ExtendedValue fitz_closed_first(const PairPoint& z);
ExtendedValue fitz_closed_second_G(const PairPoint& z);
ExtendedValue fitz_closed_second_negG(const PairPoint& z);

enum class OperatorId { GFirst, GSecond, NegGSecond };

std::string_view to_string(OperatorId op);
OperatorId parse_operator_id(std::string_view text);
DualSystem system_of(OperatorId op);
ExtendedValue fitz_closed(OperatorId op, const PairPoint& z);

/// A function on Z given by one of the finitely many forms used here.
class RepresentedFunction {
 public:
  enum class Kind {
    IndicatorGraphG,
    IndicatorGraphNegGstar,
    IndicatorClosure,
    CouplingPlusIndicator,
    FitzpatrickSampled,
    FitzpatrickClosedForm,
  };

  static RepresentedFunction indicator_graph_G(DualSystem system);
  static RepresentedFunction indicator_graph_negGstar();
  /// In-model stand-in for the conjugate of the second-system Fitzpatrick
  /// function of G. On representable points the closure of the graph of G
  /// meets the model only in the embedded graph (mass at infinity zero).
  static RepresentedFunction indicator_closure();
  static RepresentedFunction coupling_plus_indicator(SampledGraph graph);
  static RepresentedFunction fitzpatrick_sampled(SampledGraph graph);
  static RepresentedFunction fitzpatrick_closed_form(OperatorId op);

  Kind kind() const { return kind_; }
  DualSystem system() const { return system_; }
  std::string name() const;

  ExtendedValue operator()(const PairPoint& z) const;

 private:
  RepresentedFunction(Kind kind, DualSystem system) : kind_(kind), system_(system) {}

  Kind kind_;
  DualSystem system_;
  std::optional<SampledGraph> graph_;
  OperatorId op_ = OperatorId::GFirst;
};

/// Linear subspace of the truncated coordinate space
///   (x_1..x_N, [a], y_1..y_N, t)
/// where t is the constant tail of y beyond N and a is the mass at infinity
/// (SECOND system only).
class TruncatedSubspace {
 public:
  TruncatedSubspace(DualSystem system, Index truncation, std::vector<linalg::Vector> basis);

  DualSystem system() const { return system_; }
  Index truncation() const { return truncation_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_dimension() const;
  const std::vector<linalg::Vector>& basis() const { return basis_; }
  std::vector<PairPoint> basis_points() const;

  /// Coordinates of z, or nullopt when z does not fit the truncation (x
  /// supported past N, y with a head past N or a non-constant tail).
  std::optional<linalg::Vector> coordinates(const PairPoint& z) const;
  PairPoint point(const linalg::Vector& coords) const;

  /// Throws std::out_of_range for points that do not fit the truncation.
  bool contains(const PairPoint& z) const;

 private:
  DualSystem system_;
  Index truncation_;
  std::vector<linalg::Vector> basis_;
};

/// {z : z.w = 0 for every spanning w}, restricted to the truncated
/// coordinates. First components of the spanning points must be supported in
/// 1..N. Membership results hold only for points that fit the truncation.
TruncatedSubspace annihilator_truncated(std::span<const PairPoint> spanning, Index truncation,
                                        DualSystem system);

/// Checks z.w = 0 for all z in `tested`, w in `reference`. A FIRST-system side
/// is embedded when the other side lives in the SECOND system. Pairs outside
/// the model domain are counted as skipped.
PropertyVerdict orthogonality_report(const SampledGraph& reference, const SampledGraph& tested);

}  // namespace gossez
