#include <gtest/gtest.h>

#include "gossez/operator_g.hpp"
#include "gossez/probes.hpp"
#include "support.hpp"

using namespace gossez;
using gossez::test::e;
using gossez::test::q;
using gossez::test::seq;
using gossez::test::values;

TEST(Alpha, KernelTable) {
  EXPECT_EQ(alpha(1, 2), -1);
  EXPECT_EQ(alpha(2, 2), 0);
  EXPECT_EQ(alpha(3, 2), 1);
  for (Index k = 1; k < 8; ++k) {
    for (Index n = 1; n < 8; ++n) EXPECT_EQ(alpha(k, n), -alpha(n, k));
  }
}

TEST(ApplyG, SpecExamples) {
  EXPECT_EQ(apply_G(SparseSeq{}), TailSeq{});
  EXPECT_EQ(apply_G(e(1)), TailSeq::constant(-1, values({0})));
  EXPECT_EQ(apply_G(seq({1, 1})), TailSeq::constant(-2, values({1, -1})));
  EXPECT_EQ(apply_negG(SparseSeq{}), TailSeq{});
  EXPECT_EQ(apply_negG(e(1)), TailSeq::constant(1, values({0})));
  EXPECT_EQ(apply_negG(seq({1, 1})), TailSeq::constant(2, values({-1, 1})));
}

TEST(ApplyG, MatchesDefiningSums) {
  Rng rng(7);
  const SeqShape shape{.max_index = 20, .max_support = 20, .bound = 50};
  for (int i = 0; i < 200; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    const TailSeq gx = apply_G(x);
    for (Index n = 1; n <= 24; ++n) {
      Rational expected = 0;
      for (const auto& [k, v] : x.entries()) expected += alpha(k, n) * v;
      ASSERT_EQ(gx.at(n), expected);
    }
  }
}

TEST(SolveG, SpecExamples) {
  const RangeCertificate round = solve_G(apply_G(seq({1, 1})));
  EXPECT_TRUE(round.feasible);
  EXPECT_EQ(round.preimage, seq({1, 1}));

  const RangeCertificate one = solve_G(ones());
  EXPECT_FALSE(one.feasible);
  EXPECT_FALSE(one.preimage.has_value());
  ASSERT_TRUE(one.alternating_value.has_value());
  EXPECT_EQ(abs(*one.alternating_value), 2);
  EXPECT_NE(one.obstruction.find("alternates"), std::string::npos);

  const RangeCertificate zero = solve_G(TailSeq{});
  EXPECT_TRUE(zero.feasible);
  EXPECT_EQ(zero.preimage, SparseSeq{});

  const RangeCertificate e1 = solve_G(TailSeq::from_sparse(e(1)));
  EXPECT_FALSE(e1.feasible);
  EXPECT_TRUE(e1.alternating_value.has_value());

  const RangeCertificate periodic = solve_G(TailSeq::periodic(values({1, -1})));
  EXPECT_FALSE(periodic.feasible);
  EXPECT_FALSE(periodic.alternating_value.has_value());
  EXPECT_NE(periodic.obstruction.find("not in c"), std::string::npos);
}

TEST(WeakStar, SpecExamples) {
  const std::vector<SparseSeq> only_e1{e(1)};
  EXPECT_EQ(weakstar_approximate(ones(), only_e1), e(2));
  EXPECT_EQ(weakstar_approximate(TailSeq::periodic(values({3, 1})), std::vector<SparseSeq>{}), SparseSeq{});
  const std::vector<SparseSeq> two{e(1), e(2)};
  EXPECT_EQ(weakstar_approximate(TailSeq{}, two), SparseSeq{});
}

TEST(WeakStar, MatchesRandomTests) {
  Rng rng(11);
  const SeqShape shape{.max_index = 12, .max_support = 5, .bound = 100};
  for (int i = 0; i < 100; ++i) {
    const TailSeq y = random_tail(rng, shape, true);
    std::vector<SparseSeq> tests;
    const std::size_t count = rng.below(6);
    for (std::size_t k = 0; k < count; ++k) tests.push_back(random_sparse(rng, shape));
    const TailSeq gx = apply_G(weakstar_approximate(y, tests));
    for (const auto& w : tests) ASSERT_EQ(couple(w, gx), couple(w, y));
  }
}

TEST(RangeRatio, SpecExamples) {
  EXPECT_EQ(alternating_block(1), seq({1, -1}));
  EXPECT_EQ(apply_G(alternating_block(1)), TailSeq::constant(0, values({-1, -1})));
  EXPECT_EQ(range_ratio_family(1), q(1, 2));
  EXPECT_EQ(range_ratio_family(2), q(1, 4));
  EXPECT_LE(range_ratio_family(100), q(1, 100));
  EXPECT_THROW(range_ratio_family(0), std::invalid_argument);
}

// Properties -----------------------------------------------------------------

class GProperties : public ::testing::Test {
 protected:
  Rng rng{31337};
  SeqShape shape{.max_index = 64, .max_support = 64, .bound = 1000};
};

TEST_F(GProperties, Skewness) {
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    ASSERT_EQ(couple(x, apply_G(x)), 0);
  }
}

TEST_F(GProperties, AntiSymmetry) {
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    const SparseSeq y = random_sparse(rng, shape);
    ASSERT_EQ(couple(x, apply_G(y)), -couple(y, apply_G(x)));
  }
}

TEST_F(GProperties, NormBound) {
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    ASSERT_LE(linf_norm(apply_G(x)), l1_norm(x));
  }
  EXPECT_EQ(linf_norm(apply_G(e(1))), l1_norm(e(1)));
}

TEST_F(GProperties, RangeLaw) {
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    const TailSeq gx = apply_G(x);
    ASSERT_TRUE(gx.has_constant_tail());
    ASSERT_EQ(limit(gx), std::optional<Rational>(-x.entry_sum()));
    ASSERT_LE(gx.head().size(), x.max_index());
  }
}

TEST_F(GProperties, Injectivity) {
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    const RangeCertificate cert = solve_G(apply_G(x));
    ASSERT_TRUE(cert.feasible);
    ASSERT_EQ(cert.preimage, x);
  }
}

TEST_F(GProperties, PerturbedTargetsLeaveTheRange) {
  // Gx + s e_n is never in R(G): G is injective and e_n is not in R(G).
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    const Rational s = rng.nonzero_rational(1000);
    const TailSeq target = apply_G(x) + TailSeq::from_sparse(SparseSeq::unit(1 + rng.below(64), s));
    const RangeCertificate cert = solve_G(target);
    ASSERT_FALSE(cert.feasible);
    ASSERT_TRUE(cert.alternating_value.has_value());
    ASSERT_NE(*cert.alternating_value, 0);
  }
}

TEST_F(GProperties, Linearity) {
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    const SparseSeq y = random_sparse(rng, shape);
    const Rational a = rng.rational(1000);
    const Rational b = rng.rational(1000);
    ASSERT_EQ(apply_G(a * x + b * y), a * apply_G(x) + b * apply_G(y));
  }
}

TEST_F(GProperties, DifferenceRecurrence) {
  for (std::size_t i = 0; i < test::kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, shape);
    const TailSeq gx = apply_G(x);
    for (Index n = 1; n <= x.max_index(); ++n) {
      ASSERT_EQ(gx.at(n + 1) - gx.at(n), -(x.at(n) + x.at(n + 1)));
    }
  }
}

TEST_F(GProperties, RatioFamilyBound) {
  for (std::uint64_t m = 1; m <= 200; ++m) {
    ASSERT_LE(range_ratio_family(m), q(1, static_cast<long>(m)));
  }
}
