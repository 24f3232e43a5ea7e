#pragma once

#include <cstddef>
#include <vector>

#include "ncontact/rational.hpp"

namespace ncontact {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> reduce_to_rref();

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

using Vector = std::vector<Rational>;

struct LinearSolution {
  enum class Kind { Unique, WithNullspace, None };
  Kind kind = Kind::None;
  /// One solution (unset for Kind::None).
  Vector particular;
  /// Nullspace basis, itself in reduced row echelon form (rows = vectors).
  std::vector<Vector> nullspace;
};

/// Exact Gaussian elimination for A x = b.
LinearSolution solve_linear(const Matrix& a, const Vector& b);

}  // namespace ncontact
