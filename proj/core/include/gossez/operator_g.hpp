#pragma once

#include <optional>
#include <span>
#include <string>

#include "gossez/rational.hpp"
#include "gossez/sequences.hpp"

namespace gossez {

/// Kernel of G: -1 below the diagonal (k < n), 0 on it, +1 above it.
/// Antisymmetric: alpha(k, n) = -alpha(n, k).
int alpha(Index k, Index n);

/// (Gx)_n = -sum_{k<n} x_k + sum_{k>n} x_k. The result has a head over
/// 1..max(support) and constant tail -sum_k x_k.
TailSeq apply_G(const SparseSeq& x);

/// (neg G)(x) = -Gx.
TailSeq apply_negG(const SparseSeq& x);

/// Outcome of solving Gx = target on the head-plus-tail class.
struct RangeCertificate {
  TailSeq target;
  bool feasible = false;
  std::optional<SparseSeq> preimage;
  std::string obstruction;
  /// For a constant-tail target off the range: the value v at which the
  /// forced preimage continues as v, -v, v, ... forever.
  std::optional<Rational> alternating_value;
};

/// Exact inversion of G via x_1 = -lim y - y_1 and
/// x_{n+1} = (y_n - y_{n+1}) - x_n. Targets without a limit are reported
/// infeasible since the range of G consists of convergent sequences.
RangeCertificate solve_G(const TailSeq& target);

/// Finds x with <w, Gx> = <w, y> for every test functional w. The unknown
/// support starts just past the tests' support (size #tests + 2) and grows
/// toward index 1 until the system is consistent; free unknowns are zero.
SparseSeq weakstar_approximate(const TailSeq& y, std::span<const SparseSeq> tests);

/// The alternating block (1, -1, ..., 1, -1) of length 2m.
SparseSeq alternating_block(std::uint64_t m);

/// ||G x_m||_inf / ||x_m||_1 for the alternating block x_m; at most 1/m.
Rational range_ratio_family(std::uint64_t m);

}  // namespace gossez
