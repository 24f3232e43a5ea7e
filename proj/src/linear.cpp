#include "ncontact/linear.hpp"

#include "ncontact/error.hpp"

namespace ncontact {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match rows x cols");
}

std::vector<std::size_t> Matrix::reduce_to_rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && sgn((*this)(sel, col)) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(sel, c), (*this)(row, c));
    const Rational inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn((*this)(r, col)) == 0) continue;
      const Rational factor = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= factor * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length does not match matrix rows");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = aug.reduce_to_rref();
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == n) return out;  // 0 = 1 row

  out.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    out.particular[pivots[i]] = aug(i, n);
    is_pivot[pivots[i]] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) {
    out.kind = LinearSolution::Kind::Unique;
    return out;
  }
  Matrix stacked(basis.size(), n);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) stacked(r, c) = basis[r][c];
  stacked.reduce_to_rref();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    Vector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = stacked(r, c);
    out.nullspace.push_back(std::move(v));
  }
  out.kind = LinearSolution::Kind::WithNullspace;
  return out;
}

}  // namespace ncontact
