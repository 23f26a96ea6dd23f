#pragma once

#include <optional>
#include <vector>

#include "gossez/fitzpatrick.hpp"
#include "gossez/probes.hpp"
#include "gossez/verdict.hpp"

namespace gossez {

/// Geometric ladder 1, 10, 100, ... capped at (and always ending with) max.
std::vector<Rational> scale_ladder(const Rational& max);

/// Whether z lies on the analytic graph named by a sample's source label
/// ("Graph G", "Graph negG" in either system). nullopt for other labels.
std::optional<bool> on_analytic_graph(const std::string& source, const PairPoint& z);

/// Checks <x1 - x2, y1 - y2> >= 0 over all unordered sample pairs.
PropertyVerdict is_monotone(const SampledGraph& graph);

/// Tests z against every sample w (and, for linear samples, every s w with
/// s = +-ladder up to scale_max): witness-found when z is off the sample and
/// no pair violates monotonicity, refuted with the exact violator otherwise.
PropertyVerdict extension_probe(const SampledGraph& graph, const PairPoint& z,
                                const Rational& scale_max = 1000000);

/// Searches the probes for z with Fitzpatrick(z) < c(z).
PropertyVerdict ni_witness_search(OperatorId op, const ProbeSet& probes);

/// Checks that f = c on the graph samples, f >= c on the probes, and midpoint
/// convexity of f on seeded probe pairs where f is finite. Reports the
/// equality set [f = c] among the probes.
PropertyVerdict representability_check(const RepresentedFunction& f, const SampledGraph& graph,
                                       const ProbeSet& probes, std::size_t convexity_pairs = 200);

struct CrosscheckConfig {
  std::uint64_t seed = 0;
  Index truncation = 16;
  std::size_t samples = 30;
  std::size_t probes = 300;
  Rational scale_max = 1000000;
};

/// Runs the monotone, NI, representability and extension checks for one
/// operator and tests that the combined evidence agrees with its expected
/// profile. Status is verified-on-samples when consistent, refuted otherwise.
PropertyVerdict dichotomy_crosscheck(OperatorId op, const CrosscheckConfig& config = {});

/// Re-evaluates a witness's defining inequality from its points alone.
/// Supports the monotone, extension-violation and NI witness kinds.
bool revalidate(const Witness& witness);

}  // namespace gossez
