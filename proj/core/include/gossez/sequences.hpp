#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gossez/rational.hpp"

namespace gossez {

/// 1-based sequence index.
using Index = std::uint64_t;

/// Finitely supported exact sequence; the computable slice of l1.
/// Stored entries are never zero and indices are >= 1.
class SparseSeq {
 public:
  SparseSeq() = default;
  explicit SparseSeq(std::map<Index, Rational> entries);

  static SparseSeq unit(Index n, const Rational& value = 1);
  /// values[i] lands at index i + 1.
  static SparseSeq from_values(std::span<const Rational> values);

  const std::map<Index, Rational>& entries() const { return entries_; }
  Rational at(Index n) const;
  bool is_zero() const { return entries_.empty(); }
  /// Largest index in the support, 0 for the zero sequence.
  Index max_index() const;
  Rational entry_sum() const;

  SparseSeq& operator+=(const SparseSeq& other);
  SparseSeq& operator-=(const SparseSeq& other);
  SparseSeq& operator*=(const Rational& scale);

  friend SparseSeq operator+(SparseSeq a, const SparseSeq& b) { return a += b; }
  friend SparseSeq operator-(SparseSeq a, const SparseSeq& b) { return a -= b; }
  friend SparseSeq operator-(SparseSeq a) { return a *= Rational{-1}; }
  friend SparseSeq operator*(const Rational& s, SparseSeq a) { return a *= s; }
  friend bool operator==(const SparseSeq&, const SparseSeq&) = default;

 private:
  void set(Index n, Rational value);

  std::map<Index, Rational> entries_;
};

enum class TailKind { Constant, Periodic };

/// Bounded sequence given by a finite head (indices 1..H) followed by a
/// repeating pattern. Kept in canonical form: the pattern has minimal period
/// (period 1 is reported as Constant) and the head is as short as possible,
/// so structural equality is sequence equality.
class TailSeq {
 public:
  /// The zero sequence.
  TailSeq();
  TailSeq(std::vector<Rational> head, std::vector<Rational> pattern);

  static TailSeq constant(const Rational& value, std::vector<Rational> head = {});
  static TailSeq periodic(std::vector<Rational> pattern, std::vector<Rational> head = {});
  /// Embeds a finitely supported sequence (zero tail).
  static TailSeq from_sparse(const SparseSeq& x);

  const std::vector<Rational>& head() const { return head_; }
  const std::vector<Rational>& pattern() const { return pattern_; }
  std::size_t period() const { return pattern_.size(); }
  TailKind kind() const { return pattern_.size() == 1 ? TailKind::Constant : TailKind::Periodic; }
  bool has_constant_tail() const { return kind() == TailKind::Constant; }

  Rational at(Index n) const;

  TailSeq& operator+=(const TailSeq& other);
  TailSeq& operator-=(const TailSeq& other);
  TailSeq& operator*=(const Rational& scale);

  friend TailSeq operator+(TailSeq a, const TailSeq& b) { return a += b; }
  friend TailSeq operator-(TailSeq a, const TailSeq& b) { return a -= b; }
  friend TailSeq operator-(TailSeq a) { return a *= Rational{-1}; }
  friend TailSeq operator*(const Rational& s, TailSeq a) { return a *= s; }
  friend bool operator==(const TailSeq&, const TailSeq&) = default;

 private:
  template <typename Op>
  TailSeq& combine(const TailSeq& other, Op op);
  void normalize();

  std::vector<Rational> head_;
  std::vector<Rational> pattern_;
};

/// The all-ones sequence.
TailSeq ones();

Rational l1_norm(const SparseSeq& x);
Rational linf_norm(const TailSeq& y);

/// sum_n x_n y_n over the support of x.
Rational couple(const SparseSeq& x, const TailSeq& y);

/// Limit of y; nullopt when the tail oscillates (y is not convergent).
std::optional<Rational> limit(const TailSeq& y);

/// Half the spread of the tail pattern; a lower bound on the sup-norm
/// distance from y to any convergent sequence.
Rational oscillation(const TailSeq& y);

}  // namespace gossez
