#include <gtest/gtest.h>

#include "gossez/errors.hpp"
#include "gossez/fitzpatrick.hpp"
#include "gossez/model_dual.hpp"
#include "gossez/operator_g.hpp"
#include "gossez/probes.hpp"
#include "support.hpp"

using namespace gossez;
using gossez::test::e;
using gossez::test::values;

namespace {

PairPoint graph_point(const SparseSeq& x) { return PairPoint::first(x, apply_G(x)); }
const PairPoint kLimitPoint = PairPoint::second(ModelMeasure::at_infinity(1), ones());
const ExtendedValue kInf = ExtendedValue::plus_infinity();

}  // namespace

TEST(ExtendedValue, OrderAndArithmetic) {
  EXPECT_LT(ExtendedValue::minus_infinity(), ExtendedValue{-1000000});
  EXPECT_LT(ExtendedValue{1000000}, kInf);
  EXPECT_EQ(ExtendedValue{test::q(1, 2)} + ExtendedValue{test::q(1, 2)}, ExtendedValue{1});
  EXPECT_EQ(kInf + ExtendedValue{3}, kInf);
  EXPECT_THROW(kInf + ExtendedValue::minus_infinity(), std::domain_error);
  EXPECT_THROW(kInf.value(), std::logic_error);
  EXPECT_EQ(to_string(kInf), "+inf");
  EXPECT_EQ(to_string(ExtendedValue{test::q(-3, 6)}), "-1/2");
}

TEST(NegTransform, SpecExamples) {
  const SampledGraph g(DualSystem::First, "Graph G", {graph_point(e(1))}, true);
  const SampledGraph n = neg_transform(g);
  ASSERT_EQ(n.size(), 1U);
  EXPECT_EQ(n.points()[0], PairPoint::first(e(1), -apply_G(e(1))));
  EXPECT_TRUE(neg_transform(SampledGraph(DualSystem::Second, "custom")).empty());
  EXPECT_EQ(neg_transform(n), g);
}

TEST(EvalC, SpecExamples) {
  EXPECT_EQ(eval_c(graph_point(test::seq({3, -2, 7}))), 0);
  EXPECT_EQ(eval_c(kLimitPoint), 1);
  EXPECT_EQ(eval_c(PairPoint::first({}, TailSeq::periodic(values({1, 2})))), 0);
  EXPECT_THROW(eval_c(PairPoint::second(ModelMeasure::at_infinity(1), TailSeq::periodic(values({1, 2})))),
               OutsideModelDomain);
}

TEST(EvalCA, SpecExamples) {
  const SampledGraph g(DualSystem::First, "Graph G", {graph_point(e(1)), graph_point(e(2))}, true);
  EXPECT_EQ(eval_cA(graph_point(e(2)), g), ExtendedValue{0});
  EXPECT_EQ(eval_cA(graph_point(e(3)), g), kInf);
  EXPECT_EQ(eval_cA(PairPoint::first({}, {}), SampledGraph(DualSystem::First, "custom")), kInf);
}

TEST(FitzSampled, SpecExamples) {
  const SampledGraph origin(DualSystem::First, "custom", {PairPoint::first({}, {})});
  EXPECT_EQ(fitz_sampled(PairPoint::first(e(4), ones()), origin), ExtendedValue{0});

  const SampledGraph g1(DualSystem::First, "Graph G", {graph_point(e(1))}, true);
  EXPECT_EQ(fitz_sampled(graph_point(e(1)), g1), ExtendedValue{0});

  SampledGraph ladder(DualSystem::First, "Graph G", {}, true);
  for (long t = 1; t <= 10; ++t) ladder.add(graph_point(SparseSeq::unit(1, t)));
  EXPECT_EQ(fitz_sampled(PairPoint::first({}, ones()), ladder), ExtendedValue{10});

  EXPECT_EQ(fitz_sampled(kLimitPoint, SampledGraph(DualSystem::Second, "custom")),
            ExtendedValue::minus_infinity());
}

TEST(FitzClosed, SpecExamples) {
  EXPECT_EQ(fitz_closed_first(graph_point(e(1))), ExtendedValue{0});
  EXPECT_EQ(fitz_closed_first(PairPoint::first({}, ones())), kInf);
  EXPECT_EQ(fitz_closed_first(PairPoint::first({}, {})), ExtendedValue{0});

  EXPECT_EQ(fitz_closed_second_G(kLimitPoint), ExtendedValue{0});
  EXPECT_EQ(fitz_closed_second_G(graph_point(e(1)).embedded()), ExtendedValue{0});
  EXPECT_EQ(fitz_closed_second_G(PairPoint::second(ModelMeasure::at_infinity(1), {})), kInf);

  EXPECT_EQ(fitz_closed_second_negG(PairPoint::second(ModelMeasure::at_infinity(1), -ones())), ExtendedValue{0});
  EXPECT_EQ(fitz_closed_second_negG(kLimitPoint), kInf);
  EXPECT_EQ(fitz_closed_second_negG(PairPoint::second({}, {})), ExtendedValue{0});

  EXPECT_THROW(fitz_closed_first(kLimitPoint), SystemMismatch);
}

TEST(Annihilator, SpecExamples) {
  const Index n = 8;
  std::vector<PairPoint> spanning;
  for (Index k = 1; k <= n; ++k) spanning.push_back(graph_point(e(k)));

  const TruncatedSubspace first = annihilator_truncated(spanning, n, DualSystem::First);
  EXPECT_EQ(first.dimension(), n + 1);
  EXPECT_TRUE(first.contains(graph_point(test::seq({1, 2, 3, 4, 5, 6, 7, 8}))));
  EXPECT_FALSE(first.contains(PairPoint::first({}, ones())));
  EXPECT_THROW(first.contains(graph_point(e(n + 1))), std::out_of_range);

  const std::vector<PairPoint> zero{PairPoint::first({}, {})};
  const TruncatedSubspace full = annihilator_truncated(zero, n, DualSystem::First);
  EXPECT_EQ(full.dimension(), full.ambient_dimension());

  const TruncatedSubspace second = annihilator_truncated(spanning, n, DualSystem::Second);
  for (long a : {1L, -3L, 7L}) {
    EXPECT_TRUE(second.contains(PairPoint::second(ModelMeasure::at_infinity(a), TailSeq::constant(a))));
  }
  EXPECT_FALSE(second.contains(PairPoint::second(ModelMeasure::at_infinity(1), -ones())));
}

TEST(Annihilator, BasisPointsRoundTrip) {
  std::vector<PairPoint> spanning;
  for (Index k = 1; k <= 5; ++k) spanning.push_back(graph_point(e(k)));
  for (auto system : {DualSystem::First, DualSystem::Second}) {
    const TruncatedSubspace s = annihilator_truncated(spanning, 5, system);
    for (const auto& p : s.basis_points()) {
      EXPECT_TRUE(s.contains(p));
      EXPECT_EQ(s.point(*s.coordinates(p)), p);
      const PairPoint w = system == DualSystem::First ? spanning[2] : spanning[2].embedded();
      EXPECT_EQ(natural_couple(p, w), 0);
    }
  }
}

TEST(Orthogonality, SpecExamples) {
  Rng rng(5);
  const SeqShape shape{.max_index = 16, .max_support = 6, .bound = 100};
  const SampledGraph g = sample_graph_G(DualSystem::First, rng, 40, shape);
  const PropertyVerdict self = orthogonality_report(g, g);
  EXPECT_EQ(self.status, VerdictStatus::VerifiedOnSamples);
  EXPECT_EQ(self.stats.checked, 1600U);
  EXPECT_EQ(self.stats.extra.at("violations"), "0");

  const PropertyVerdict limit = orthogonality_report(g, SampledGraph(DualSystem::Second, "custom", {kLimitPoint}));
  EXPECT_EQ(limit.status, VerdictStatus::VerifiedOnSamples);

  SampledGraph units(DualSystem::First, "Graph G", {graph_point(e(1)), graph_point(e(2))}, true);
  const PropertyVerdict bad =
      orthogonality_report(units, SampledGraph(DualSystem::First, "custom", {PairPoint::first({}, ones())}));
  EXPECT_EQ(bad.status, VerdictStatus::Refuted);
  ASSERT_EQ(bad.witnesses.size(), 1U);
  EXPECT_EQ(bad.witnesses[0].value("pairing"), 1);
}

// Properties -----------------------------------------------------------------

class FitzProperties : public ::testing::Test {
 protected:
  Rng rng{777};
  SeqShape shape{.max_index = 24, .max_support = 8, .bound = 1000};
};

TEST_F(FitzProperties, NegTransformIsInvolutive) {
  for (int i = 0; i < 100; ++i) {
    const SampledGraph g = sample_graph_G(rng.coin() ? DualSystem::First : DualSystem::Second, rng, 10, shape);
    ASSERT_EQ(neg_transform(neg_transform(g)), g);
  }
}

TEST_F(FitzProperties, SampledIsLowerBoundOfClosedForm) {
  const SampledGraph pool = sample_graph_G(DualSystem::First, rng, 30, shape, 6);
  const ProbeSet probes = make_probe_grid(DualSystem::First, ProbeDescriptor{.seed = 3, .count = 300});
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const PairPoint& z = probes.points[rng.below(probes.points.size())];
    SampledGraph subset(DualSystem::First, "Graph G", {}, true);
    for (std::size_t k = 0, n = rng.below(8); k < n; ++k) subset.add(pool.points()[rng.below(pool.size())]);
    ASSERT_LE(fitz_sampled(z, subset), fitz_closed_first(z));
  }
}

TEST_F(FitzProperties, ExactOnGraph) {
  const SampledGraph pool = sample_graph_G(DualSystem::First, rng, 40, shape);
  for (const auto& z : pool.points()) {
    ASSERT_EQ(fitz_sampled(z, pool), ExtendedValue{0});
    ASSERT_EQ(fitz_closed_first(z), ExtendedValue{0});
  }
}

TEST_F(FitzProperties, DivergesOffGraph) {
  for (const auto& z : off_graph_points_first(rng, 50, 8, 1000)) {
    const TailSeq gap = z.y() - apply_G(z.x_seq());
    Index k = 1;
    while (gap.at(k) == 0) ++k;
    const Rational kappa = gap.at(k);
    // At t = 10^7 / |kappa|, the pair value is t kappa = 10^7 > 10^6.
    const Rational t = Rational{10000000} / kappa;
    const SampledGraph family(DualSystem::First, "Graph G", {graph_point(SparseSeq::unit(k, t))}, true);
    ASSERT_GT(fitz_sampled(z, family), ExtendedValue{1000000});
    ASSERT_EQ(fitz_closed_first(z), kInf);
  }
}

TEST_F(FitzProperties, NegInterplay) {
  const ProbeSet probes = make_probe_grid(DualSystem::Second, ProbeDescriptor{.seed = 8, .count = 1000});
  for (const auto& z : probes.points) {
    ASSERT_EQ(fitz_closed_second_negG(z), fitz_closed_second_G(neg_transform(z)));
  }
}

TEST_F(FitzProperties, AnnihilatorSeparatesWithinTruncation) {
  const Index n = 12;
  std::vector<PairPoint> spanning;
  for (Index k = 1; k <= n; ++k) spanning.push_back(graph_point(e(k)));
  const TruncatedSubspace s = annihilator_truncated(spanning, n, DualSystem::First);
  const SeqShape inside{.max_index = n, .max_support = n, .bound = 1000};
  for (int i = 0; i < 100; ++i) {
    ASSERT_TRUE(s.contains(graph_point(random_sparse(rng, inside))));
  }
  for (const auto& z : off_graph_points_first(rng, 100, n / 2, 1000)) ASSERT_FALSE(s.contains(z));
}
