#include "ncontact/resultant.hpp"

#include "ncontact/error.hpp"

namespace ncontact {

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
  if (n == 0) return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k].is_zero()) ++sel;
      if (sel == n) return {};
      std::swap(m[k], m[sel]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = UniPoly{};
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

UniPoly resultant_y(const BiPoly& g, const BiPoly& h) {
  if (g.is_zero() || h.is_zero()) return {};
  const int m = g.degree_in(1);
  const int n = h.degree_in(1);
  if (m == 0 && n == 0) throw BothConstantInY("resultant_y: neither polynomial involves y");
  auto gc = g.coefficients_in(1);
  auto hc = h.coefficients_in(1);
  if (n == 0) return pow(hc[0], static_cast<unsigned>(m));
  if (m == 0) return pow(gc[0], static_cast<unsigned>(n));

  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size));
  // Rows 0..n-1 carry shifted coefficients of g (highest y-power first),
  // rows n..n+m-1 those of h.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) {
      auto it = gc.find(m - j);
      if (it != gc.end()) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = it->second;
    }
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) {
      auto it = hc.find(n - j);
      if (it != hc.end()) syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = it->second;
    }
  return determinant(std::move(syl));
}

}  // namespace ncontact
