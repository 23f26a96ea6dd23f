// Acceptance criteria, one line each. Exit status is the number of failures
// (capped), so ctest reports any failing criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gossez/checks.hpp"
#include "gossez/fitzpatrick.hpp"
#include "gossez/model_dual.hpp"
#include "gossez/monotone.hpp"
#include "gossez/operator_g.hpp"
#include "gossez/probes.hpp"
#include "gossez/report.hpp"

using namespace gossez;

namespace {

constexpr std::size_t kTrials = 1000;
const SeqShape kShape{.max_index = 64, .max_support = 64, .bound = 1000};

struct Outcome {
  bool ok;
  std::string detail;
};

PairPoint graph_point(const SparseSeq& x) { return PairPoint::first(x, apply_G(x)); }
std::string str(std::size_t n) { return std::to_string(n); }

Outcome skewness() {
  Rng rng(1);
  std::size_t good = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, kShape);
    good += couple(x, apply_G(x)) == 0;
  }
  return {good == kTrials, str(good) + "/" + str(kTrials) + " exact zeros"};
}

Outcome antisymmetry() {
  Rng rng(2);
  std::size_t good = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, kShape);
    const SparseSeq y = random_sparse(rng, kShape);
    good += couple(x, apply_G(y)) + couple(y, apply_G(x)) == 0;
  }
  return {good == kTrials, str(good) + "/" + str(kTrials) + " pairs"};
}

Outcome norm_bound() {
  Rng rng(3);
  std::size_t good = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, kShape);
    good += linf_norm(apply_G(x)) <= l1_norm(x);
  }
  const SparseSeq e1 = SparseSeq::unit(1);
  const bool equality = linf_norm(apply_G(e1)) == 1 && l1_norm(e1) == 1;
  return {good == kTrials && equality,
          str(good) + "/" + str(kTrials) + ", equality at e1: " + (equality ? "yes" : "no")};
}

Outcome range_and_injectivity() {
  Rng rng(4);
  std::size_t law = 0;
  std::size_t inverse = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const SparseSeq x = random_sparse(rng, kShape);
    const TailSeq gx = apply_G(x);
    const auto lim = limit(gx);
    law += lim.has_value() && *lim == -x.entry_sum();
    const RangeCertificate cert = solve_G(gx);
    inverse += cert.feasible && cert.preimage == x;
  }
  const RangeCertificate ones_cert = solve_G(ones());
  const RangeCertificate e1_cert = solve_G(TailSeq::from_sparse(SparseSeq::unit(1)));
  const bool obstructions = !ones_cert.feasible && ones_cert.alternating_value && !e1_cert.feasible &&
                            e1_cert.alternating_value;
  return {law == kTrials && inverse == kTrials && obstructions,
          "limit law " + str(law) + ", round trips " + str(inverse) + ", 1 and e1 infeasible: " +
              (obstructions ? "yes (" + to_string(*ones_cert.alternating_value) + ", " +
                                  to_string(*e1_cert.alternating_value) + ")"
                            : std::string{"no"})};
}

Outcome adjoint() {
  Rng rng(5);
  std::size_t good = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const SparseSeq y = random_sparse(rng, kShape);
    const ModelMeasure mu = random_measure(rng, kShape, false);
    good += couple(y, apply_Gstar(mu)) == pair_measure(mu, apply_G(y));
  }
  return {good == kTrials, str(good) + "/" + str(kTrials) + " model pairs"};
}

Outcome first_duality() {
  Rng rng(6);
  const SeqShape shape{.max_index = 32, .max_support = 8, .bound = 1000};
  std::size_t zeros = 0;
  for (int i = 0; i < 200; ++i) zeros += fitz_closed_first(graph_point(random_sparse(rng, shape))) == ExtendedValue{0};

  std::size_t diverged = 0;
  const ExtendedValue threshold{1000000};
  for (const auto& z : off_graph_points_first(rng, 50, 16, 1000)) {
    const TailSeq gap = z.y() - apply_G(z.x_seq());
    Index k = 1;
    while (gap.at(k) == 0) ++k;
    const Rational kappa = gap.at(k);
    SampledGraph family(DualSystem::First, "Graph G", {}, true);
    for (const Rational& s : scale_ladder(Rational{10000000} / abs(kappa))) {
      family.add(graph_point(SparseSeq::unit(k, kappa > 0 ? s : Rational{-s})));
    }
    diverged += fitz_sampled(z, family) > threshold;
  }

  const SampledGraph pool = sample_graph_G(DualSystem::First, rng, 24, shape, 8);
  const ProbeSet probes = make_probe_grid(DualSystem::First, ProbeDescriptor{.seed = 6, .truncation = 32, .count = 500});
  std::size_t bounded = 0;
  const std::size_t combos = 10000;
  for (std::size_t i = 0; i < combos; ++i) {
    const PairPoint& z = probes.points[rng.below(probes.points.size())];
    SampledGraph subset(DualSystem::First, "Graph G", {}, true);
    for (std::size_t k = 0, n = rng.below(6); k < n; ++k) subset.add(pool.points()[rng.below(pool.size())]);
    bounded += fitz_sampled(z, subset) <= fitz_closed_first(z);
  }
  return {zeros == 200 && diverged == 50 && bounded == combos,
          "zero on " + str(zeros) + "/200 graph points, diverged " + str(diverged) + "/50, lower bound " +
              str(bounded) + "/" + str(combos)};
}

Outcome self_orthogonality() {
  Rng rng(7);
  const SampledGraph g = sample_graph_G(DualSystem::First, rng, 40, SeqShape{.max_index = 32, .max_support = 8});
  const PropertyVerdict orth = orthogonality_report(g, g);

  const Index n = 32;
  std::vector<PairPoint> spanning;
  for (Index k = 1; k <= n; ++k) spanning.push_back(graph_point(SparseSeq::unit(k)));
  const TruncatedSubspace s = annihilator_truncated(spanning, n, DualSystem::First);
  std::size_t contained = 0;
  const SeqShape inside{.max_index = n, .max_support = n, .bound = 1000};
  for (int i = 0; i < 100; ++i) contained += s.contains(graph_point(random_sparse(rng, inside)));
  std::size_t excluded = 0;
  for (const auto& z : off_graph_points_first(rng, 100, n / 2, 1000)) excluded += !s.contains(z);
  const bool ok = orth.status == VerdictStatus::VerifiedOnSamples && orth.stats.checked == 1600 &&
                  orth.stats.extra.at("violations") == "0" && contained == 100 && excluded == 100;
  return {ok, str(orth.stats.checked) + " pairs, " + orth.stats.extra.at("violations") +
                  " violations; annihilator N=32 contains " + str(contained) + "/100, excludes " + str(excluded) +
                  "/100"};
}

Outcome ni_dichotomy() {
  ProbeSet with_limit = make_probe_grid(DualSystem::Second, ProbeDescriptor{.seed = 8, .count = 1000});
  const PairPoint limit_point = PairPoint::second(ModelMeasure::at_infinity(1), ones());
  with_limit.points.insert(with_limit.points.begin(), limit_point);
  const PropertyVerdict g2 = ni_witness_search(OperatorId::GSecond, with_limit);
  const bool g2_ok = g2.status == VerdictStatus::WitnessFound && g2.witnesses.front().points.front() == limit_point &&
                     g2.witnesses.front().value("margin") == 1;

  const ProbeSet grid2 = make_probe_grid(DualSystem::Second, ProbeDescriptor{.seed = 9, .count = 1000});
  const ProbeSet grid1 = make_probe_grid(DualSystem::First, ProbeDescriptor{.seed = 9, .count = 1000});
  const PropertyVerdict neg = ni_witness_search(OperatorId::NegGSecond, grid2);
  const PropertyVerdict first = ni_witness_search(OperatorId::GFirst, grid1);

  Rng rng(8);
  std::size_t couplings = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const ModelMeasure mu = random_measure(rng, kShape, rng.coin());
    const Rational a2 = mu.infinity_mass * mu.infinity_mass;
    couplings += pair_measure(mu, -apply_Gstar(mu)) == a2 && pair_measure(mu, apply_Gstar(mu)) == -a2;
  }
  const bool ok = g2_ok && neg.witnesses.empty() && neg.stats.checked == 1000 && first.witnesses.empty() &&
                  first.stats.checked == 1000 && couplings == kTrials;
  return {ok, std::string{"G-second witness at ((0,1),1) margin 1: "} + (g2_ok ? "yes" : "no") +
                  "; negG-second witnesses " + str(neg.witnesses.size()) + ", G-first witnesses " +
                  str(first.witnesses.size()) + "; a^2 couplings " + str(couplings) + "/" + str(kTrials)};
}

Outcome maximality_contrast() {
  Rng rng(9);
  const SeqShape shape{.max_index = 16, .max_support = 6, .bound = 1000};
  const SampledGraph first = sample_graph_G(DualSystem::First, rng, 30, shape, 8);
  std::size_t refuted = 0;
  for (const auto& z : off_graph_points_first(rng, 100, 8, 1000)) {
    refuted += extension_probe(first, z, 1000000).status == VerdictStatus::Refuted;
  }
  const SampledGraph second = sample_graph_G(DualSystem::Second, rng, 30, shape, 8);
  const PairPoint limit_point = PairPoint::second(ModelMeasure::at_infinity(1), ones());
  const bool witness = extension_probe(second, limit_point, 1000000).status == VerdictStatus::WitnessFound;
  std::string profiles;
  bool consistent = true;
  for (auto op : {OperatorId::GFirst, OperatorId::GSecond, OperatorId::NegGSecond}) {
    const PropertyVerdict v = dichotomy_crosscheck(op, CrosscheckConfig{.seed = 9});
    consistent = consistent && v.status == VerdictStatus::VerifiedOnSamples;
    profiles += std::string{to_string(op)} + "=" + v.stats.extra.at("profile") + " ";
  }
  return {refuted == 100 && witness && consistent,
          "refuted " + str(refuted) + "/100 off-graph, witness ((0,1),1): " + (witness ? "yes" : "no") + "; " +
              profiles};
}

Outcome range_pathology() {
  bool ratios = true;
  for (std::uint64_t m : {1ULL, 10ULL, 100ULL, 1000ULL}) {
    ratios = ratios && range_ratio_family(m) <= Rational{1} / Rational{static_cast<unsigned long>(m)};
  }
  Rng rng(10);
  const TailSeq alternating = TailSeq::periodic({Rational{1}, Rational{-1}});
  std::size_t far = 0;
  for (int i = 0; i < 500; ++i) far += linf_norm(apply_G(random_sparse(rng, kShape)) - alternating) >= 1;
  std::vector<SparseSeq> tests;
  for (int i = 0; i < 5; ++i) tests.push_back(random_sparse(rng, SeqShape{.max_index = 16, .max_support = 4}));
  const TailSeq gx = apply_G(weakstar_approximate(ones(), tests));
  std::size_t matched = 0;
  for (const auto& w : tests) matched += couple(w, gx) == couple(w, ones());
  return {ratios && far == 500 && matched == 5, std::string{"ratios <= 1/m: "} + (ratios ? "yes" : "no") +
                                                    ", distance >= 1 for " + str(far) +
                                                    "/500, weak-star tests matched " + str(matched) + "/5"};
}

Outcome determinism() {
  const CheckConfig cfg;
  const auto start = std::chrono::steady_clock::now();
  const ReportDoc first = run_checks(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const ReportDoc second = run_checks(cfg);
  const bool identical = emit(first, ReportFormat::Json) == emit(second, ReportFormat::Json);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", seconds);
  return {identical && seconds < 60.0 && first.all_passed(),
          std::string{"byte-identical: "} + (identical ? "yes" : "no") + ", full suite " + buf + " s, all passed: " +
              (first.all_passed() ? "yes" : "no (" + first.first_failure() + ")")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"skewness", skewness},
      {"anti-symmetry", antisymmetry},
      {"norm bound", norm_bound},
      {"range law and injectivity", range_and_injectivity},
      {"adjoint identity", adjoint},
      {"first-system Fitzpatrick duality", first_duality},
      {"self-orthogonality", self_orthogonality},
      {"NI dichotomy", ni_dichotomy},
      {"maximality contrast", maximality_contrast},
      {"range pathology", range_pathology},
      {"report determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out{false, ""};
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string{"exception: "} + e.what()};
    }
    failures += !out.ok;
    std::printf("%s criterion %zu (%s): %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
