#include "gossez/operator_g.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "gossez/exact_linalg.hpp"

namespace gossez {

int alpha(Index k, Index n) {
  if (k < n) return -1;
  if (k > n) return 1;
  return 0;
}

TailSeq apply_G(const SparseSeq& x) {
  const Index m = x.max_index();
  const Rational total = x.entry_sum();
  // (Gx)_n = total - 2 * prefix_{<n} - x_n
  std::vector<Rational> head;
  head.reserve(m);
  Rational prefix = 0;
  for (Index n = 1; n <= m; ++n) {
    const Rational xn = x.at(n);
    head.push_back(total - 2 * prefix - xn);
    prefix += xn;
  }
  return TailSeq::constant(-total, std::move(head));
}

TailSeq apply_negG(const SparseSeq& x) { return -apply_G(x); }

RangeCertificate solve_G(const TailSeq& target) {
  RangeCertificate cert{.target = target};
  const auto lim = limit(target);
  if (!lim) {
    cert.obstruction = "not in c: target has an oscillating tail and no limit";
    return cert;
  }
  const Index h = target.head().size();
  std::map<Index, Rational> entries;
  Rational current = -*lim - target.at(1);
  for (Index n = 1; n <= h; ++n) {
    entries.emplace(n, current);
    current = (target.at(n) - target.at(n + 1)) - current;
  }
  // Past the head the target is constant, so x_{n+1} = -x_n from here on.
  if (current != 0) {
    cert.alternating_value = current;
    cert.obstruction = "preimage alternates with magnitude " + to_string(Rational{abs(current)}) +
                       " from index " + std::to_string(h + 1) + " on; not summable";
    return cert;
  }
  SparseSeq preimage{std::move(entries)};
  if (apply_G(preimage) != target) {
    throw std::logic_error("solve_G: round trip failed on a feasible target");
  }
  cert.feasible = true;
  cert.preimage = std::move(preimage);
  return cert;
}

SparseSeq weakstar_approximate(const TailSeq& y, std::span<const SparseSeq> tests) {
  if (tests.empty()) return {};
  Index boundary = 0;
  for (const auto& w : tests) boundary = std::max(boundary, w.max_index());

  linalg::Vector rhs;
  rhs.reserve(tests.size());
  for (const auto& w : tests) rhs.push_back(couple(w, y));

  Index lo = boundary + 1;
  Index hi = boundary + tests.size() + 2;
  while (true) {
    const std::size_t width = hi - lo + 1;
    linalg::Matrix m(tests.size(), width);
    for (std::size_t j = 0; j < width; ++j) {
      const TailSeq column = apply_G(SparseSeq::unit(lo + j));
      for (std::size_t i = 0; i < tests.size(); ++i) m(i, j) = couple(tests[i], column);
    }
    if (const auto sol = linalg::solve(m, rhs)) {
      std::map<Index, Rational> entries;
      for (std::size_t j = 0; j < width; ++j) entries.emplace(lo + j, (*sol)[j]);
      return SparseSeq{std::move(entries)};
    }
    // Support 1..boundary+1 always suffices: G is injective and the tests
    // only see indices up to the boundary plus the constant tail.
    if (lo > 1) {
      --lo;
    } else {
      throw std::logic_error("weakstar_approximate: system inconsistent on full support");
    }
  }
}

SparseSeq alternating_block(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("alternating block length must be positive");
  std::map<Index, Rational> entries;
  for (Index n = 1; n <= 2 * m; ++n) entries.emplace(n, n % 2 == 1 ? 1 : -1);
  return SparseSeq{std::move(entries)};
}

Rational range_ratio_family(std::uint64_t m) {
  const SparseSeq x = alternating_block(m);
  return linf_norm(apply_G(x)) / l1_norm(x);
}

}  // namespace gossez
