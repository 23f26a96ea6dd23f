#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gossez/fitzpatrick.hpp"
#include "gossez/measure.hpp"
#include "gossez/pair_point.hpp"
#include "gossez/sequences.hpp"

namespace gossez {

/// Seeded generator. Draws are built from raw mt19937_64 output (whose
/// sequence is fixed by the standard) so runs reproduce across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() & 1U) != 0; }
  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(std::int64_t bound);
  Rational nonzero_rational(std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Shape of randomly drawn sequences.
struct SeqShape {
  Index max_index = 64;          ///< support drawn from 1..max_index
  std::uint64_t max_support = 64;  ///< at most this many nonzero entries
  std::int64_t bound = 1000;     ///< numerator and denominator bound
};

SparseSeq random_sparse(Rng& rng, const SeqShape& shape);
/// Random bounded sequence with head in 1..max_index; periodic tails allowed
/// when `periodic` is set.
TailSeq random_tail(Rng& rng, const SeqShape& shape, bool periodic);
ModelMeasure random_measure(Rng& rng, const SeqShape& shape, bool nonzero_mass);

/// Samples (x, Gx): the unit vectors e_1..e_units first, then `count` random
/// points. SECOND system samples are the canonical embedding.
SampledGraph sample_graph_G(DualSystem system, Rng& rng, std::size_t count, const SeqShape& shape,
                            Index units = 0);
/// Samples (x, -Gx) in the SECOND system.
SampledGraph sample_graph_negG_second(Rng& rng, std::size_t count, const SeqShape& shape,
                                      Index units = 0);

/// FIRST-system points (x, Gx + d) with x and d supported in 1..half and
/// d != 0, entries of d bounded away from zero by 1/shape.bound.
std::vector<PairPoint> off_graph_points_first(Rng& rng, std::size_t count, Index half,
                                              std::int64_t bound);

/// Reproducible description of a probe set.
struct ProbeDescriptor {
  std::uint64_t seed = 0;
  Index truncation = 16;
  std::int64_t coord_bound = 10;
  std::uint64_t max_support = 6;
  std::size_t count = 1000;

  friend bool operator==(const ProbeDescriptor&, const ProbeDescriptor&) = default;
};

struct ProbeSet {
  DualSystem system = DualSystem::First;
  std::vector<PairPoint> points;
  ProbeDescriptor generation;
};

/// Deterministic probe grid. FIRST: graph points of G, small off-graph
/// perturbations and unstructured points in rotation. SECOND: points of the
/// graphs of neg G* and G*, embedded graph points, and unstructured points,
/// all inside the model domain.
ProbeSet make_probe_grid(DualSystem system, const ProbeDescriptor& descriptor);

}  // namespace gossez
