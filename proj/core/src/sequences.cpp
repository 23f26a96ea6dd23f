#include "gossez/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace gossez {

// SparseSeq

SparseSeq::SparseSeq(std::map<Index, Rational> entries) {
  for (auto& [n, v] : entries) set(n, std::move(v));
}

SparseSeq SparseSeq::unit(Index n, const Rational& value) {
  SparseSeq s;
  s.set(n, value);
  return s;
}

SparseSeq SparseSeq::from_values(std::span<const Rational> values) {
  SparseSeq s;
  for (std::size_t i = 0; i < values.size(); ++i) s.set(i + 1, values[i]);
  return s;
}

void SparseSeq::set(Index n, Rational value) {
  if (n == 0) throw std::invalid_argument("sequence indices start at 1");
  if (value == 0) {
    entries_.erase(n);
  } else {
    entries_.insert_or_assign(n, std::move(value));
  }
}

Rational SparseSeq::at(Index n) const {
  const auto it = entries_.find(n);
  return it == entries_.end() ? Rational{0} : it->second;
}

Index SparseSeq::max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

Rational SparseSeq::entry_sum() const {
  Rational sum = 0;
  for (const auto& [n, v] : entries_) sum += v;
  return sum;
}

SparseSeq& SparseSeq::operator+=(const SparseSeq& other) {
  for (const auto& [n, v] : other.entries_) set(n, at(n) + v);
  return *this;
}

SparseSeq& SparseSeq::operator-=(const SparseSeq& other) {
  for (const auto& [n, v] : other.entries_) set(n, at(n) - v);
  return *this;
}

SparseSeq& SparseSeq::operator*=(const Rational& scale) {
  if (scale == 0) {
    entries_.clear();
  } else {
    for (auto& [n, v] : entries_) v *= scale;
  }
  return *this;
}

// TailSeq

TailSeq::TailSeq() : pattern_{Rational{0}} {}

TailSeq::TailSeq(std::vector<Rational> head, std::vector<Rational> pattern)
    : head_(std::move(head)), pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw std::invalid_argument("tail pattern must be nonempty");
  normalize();
}

TailSeq TailSeq::constant(const Rational& value, std::vector<Rational> head) {
  return TailSeq(std::move(head), {value});
}

TailSeq TailSeq::periodic(std::vector<Rational> pattern, std::vector<Rational> head) {
  return TailSeq(std::move(head), std::move(pattern));
}

TailSeq TailSeq::from_sparse(const SparseSeq& x) {
  std::vector<Rational> head(x.max_index(), Rational{0});
  for (const auto& [n, v] : x.entries()) head[n - 1] = v;
  return TailSeq(std::move(head), {Rational{0}});
}

Rational TailSeq::at(Index n) const {
  if (n == 0) throw std::invalid_argument("sequence indices start at 1");
  if (n <= head_.size()) return head_[n - 1];
  return pattern_[(n - head_.size() - 1) % pattern_.size()];
}

void TailSeq::normalize() {
  // Minimal period.
  const std::size_t p = pattern_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = pattern_[i] == pattern_[i - d];
    if (repeats) {
      pattern_.resize(d);
      break;
    }
  }
  // Absorb trailing head values that already follow the pattern.
  while (!head_.empty() && head_.back() == pattern_.back()) {
    std::rotate(pattern_.rbegin(), pattern_.rbegin() + 1, pattern_.rend());
    head_.pop_back();
  }
}

template <typename Op>
TailSeq& TailSeq::combine(const TailSeq& other, Op op) {
  const std::size_t h = std::max(head_.size(), other.head_.size());
  const std::size_t p = std::lcm(pattern_.size(), other.pattern_.size());
  std::vector<Rational> head;
  head.reserve(h);
  for (Index n = 1; n <= h; ++n) head.push_back(op(at(n), other.at(n)));
  std::vector<Rational> pattern;
  pattern.reserve(p);
  for (Index n = h + 1; n <= h + p; ++n) pattern.push_back(op(at(n), other.at(n)));
  head_ = std::move(head);
  pattern_ = std::move(pattern);
  normalize();
  return *this;
}

TailSeq& TailSeq::operator+=(const TailSeq& other) {
  return combine(other, [](const Rational& a, const Rational& b) { return Rational{a + b}; });
}

TailSeq& TailSeq::operator-=(const TailSeq& other) {
  return combine(other, [](const Rational& a, const Rational& b) { return Rational{a - b}; });
}

TailSeq& TailSeq::operator*=(const Rational& scale) {
  for (auto& v : head_) v *= scale;
  for (auto& v : pattern_) v *= scale;
  if (scale == 0) {
    head_.clear();
    pattern_.assign(1, Rational{0});
  }
  return *this;
}

TailSeq ones() { return TailSeq::constant(1); }

// Norms and couplings

Rational l1_norm(const SparseSeq& x) {
  Rational sum = 0;
  for (const auto& [n, v] : x.entries()) sum += abs(v);
  return sum;
}

Rational linf_norm(const TailSeq& y) {
  Rational best = 0;
  for (const auto& v : y.head()) best = std::max(best, Rational{abs(v)});
  for (const auto& v : y.pattern()) best = std::max(best, Rational{abs(v)});
  return best;
}

Rational couple(const SparseSeq& x, const TailSeq& y) {
  Rational sum = 0;
  for (const auto& [n, v] : x.entries()) sum += v * y.at(n);
  return sum;
}

std::optional<Rational> limit(const TailSeq& y) {
  if (!y.has_constant_tail()) return std::nullopt;
  return y.pattern().front();
}

Rational oscillation(const TailSeq& y) {
  const auto [lo, hi] = std::minmax_element(y.pattern().begin(), y.pattern().end());
  return Rational{(*hi - *lo) / 2};
}

}  // namespace gossez
