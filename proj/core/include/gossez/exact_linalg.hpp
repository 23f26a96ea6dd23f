#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gossez/rational.hpp"

namespace gossez::linalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduces m to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}, one vector per free column (free entry = 1).
std::vector<Vector> nullspace(Matrix m);

/// A solution of m v = rhs with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// True iff v lies in the span of the given vectors.
bool in_span(const std::vector<Vector>& basis, const Vector& v);

}  // namespace gossez::linalg
