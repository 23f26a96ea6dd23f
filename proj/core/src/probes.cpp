#include "gossez/probes.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "gossez/model_dual.hpp"
#include "gossez/operator_g.hpp"

namespace gossez {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between with empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rational Rng::rational(std::int64_t bound) {
  const auto num = between(-bound, bound);
  const auto den = between(1, bound);
  return make_rational(num, den);
}

Rational Rng::nonzero_rational(std::int64_t bound) {
  auto num = between(1, bound);
  if (coin()) num = -num;
  return make_rational(num, between(1, bound));
}

SparseSeq random_sparse(Rng& rng, const SeqShape& shape) {
  const std::uint64_t cap = std::min<std::uint64_t>(shape.max_support, shape.max_index);
  const std::uint64_t support = cap == 0 ? 0 : 1 + rng.below(cap);
  std::map<Index, Rational> entries;
  while (entries.size() < support) {
    entries.emplace(1 + rng.below(shape.max_index), rng.nonzero_rational(shape.bound));
  }
  return SparseSeq{std::move(entries)};
}

TailSeq random_tail(Rng& rng, const SeqShape& shape, bool periodic) {
  const Index head_len = rng.below(shape.max_index + 1);
  std::vector<Rational> head;
  for (Index i = 0; i < head_len; ++i) head.push_back(rng.rational(shape.bound));
  const std::size_t period = periodic ? 1 + rng.below(3) : 1;
  std::vector<Rational> pattern;
  for (std::size_t i = 0; i < period; ++i) pattern.push_back(rng.rational(shape.bound));
  return TailSeq(std::move(head), std::move(pattern));
}

ModelMeasure random_measure(Rng& rng, const SeqShape& shape, bool nonzero_mass) {
  ModelMeasure mu;
  mu.atomic = rng.below(4) == 0 ? SparseSeq{} : random_sparse(rng, shape);
  mu.infinity_mass = nonzero_mass ? rng.nonzero_rational(shape.bound) : rng.rational(shape.bound);
  return mu;
}

SampledGraph sample_graph_G(DualSystem system, Rng& rng, std::size_t count, const SeqShape& shape,
                            Index units) {
  SampledGraph graph(system, "Graph G", {}, true);
  auto add = [&](const SparseSeq& x) {
    const PairPoint p = PairPoint::first(x, apply_G(x));
    graph.add(system == DualSystem::First ? p : p.embedded());
  };
  for (Index k = 1; k <= units; ++k) add(SparseSeq::unit(k));
  for (std::size_t i = 0; i < count; ++i) add(random_sparse(rng, shape));
  return graph;
}

SampledGraph sample_graph_negG_second(Rng& rng, std::size_t count, const SeqShape& shape,
                                      Index units) {
  SampledGraph graph(DualSystem::Second, "Graph negG", {}, true);
  auto add = [&](const SparseSeq& x) {
    graph.add(PairPoint::second(ModelMeasure::atoms(x), apply_negG(x)));
  };
  for (Index k = 1; k <= units; ++k) add(SparseSeq::unit(k));
  for (std::size_t i = 0; i < count; ++i) add(random_sparse(rng, shape));
  return graph;
}

std::vector<PairPoint> off_graph_points_first(Rng& rng, std::size_t count, Index half,
                                              std::int64_t bound) {
  if (half == 0) throw std::invalid_argument("off-graph support must be positive");
  const SeqShape shape{.max_index = half, .max_support = half, .bound = bound};
  std::vector<PairPoint> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SparseSeq x = rng.below(5) == 0 ? SparseSeq{} : random_sparse(rng, shape);
    const SparseSeq d = random_sparse(rng, shape);
    points.push_back(PairPoint::first(x, apply_G(x) + TailSeq::from_sparse(d)));
  }
  return points;
}

ProbeSet make_probe_grid(DualSystem system, const ProbeDescriptor& descriptor) {
  Rng rng(descriptor.seed);
  const SeqShape shape{.max_index = descriptor.truncation,
                       .max_support = descriptor.max_support,
                       .bound = descriptor.coord_bound};
  ProbeSet probes{.system = system, .points = {}, .generation = descriptor};
  probes.points.reserve(descriptor.count);
  const Index half = std::max<Index>(1, descriptor.truncation / 2);
  for (std::size_t i = 0; i < descriptor.count; ++i) {
    if (system == DualSystem::First) {
      switch (i % 3) {
        case 0: {
          const SparseSeq x = random_sparse(rng, shape);
          probes.points.push_back(PairPoint::first(x, apply_G(x)));
          break;
        }
        case 1:
          probes.points.push_back(off_graph_points_first(rng, 1, half, descriptor.coord_bound)[0]);
          break;
        default:
          probes.points.push_back(
              PairPoint::first(random_sparse(rng, shape), random_tail(rng, shape, true)));
          break;
      }
      continue;
    }
    switch (i % 4) {
      case 0:
        probes.points.push_back(graph_negGstar_point(random_measure(rng, shape, rng.coin())));
        break;
      case 1: {
        const ModelMeasure mu = random_measure(rng, shape, rng.coin());
        probes.points.push_back(PairPoint::second(mu, apply_Gstar(mu)));
        break;
      }
      case 2: {
        const SparseSeq x = random_sparse(rng, shape);
        probes.points.push_back(PairPoint::second(ModelMeasure::atoms(x), apply_G(x)));
        break;
      }
      default: {
        const ModelMeasure mu = random_measure(rng, shape, false);
        // A nonzero mass needs a convergent partner to stay in the model.
        const bool periodic = mu.infinity_mass == 0;
        probes.points.push_back(PairPoint::second(mu, random_tail(rng, shape, periodic)));
        break;
      }
    }
  }
  return probes;
}

}  // namespace gossez
