#include "ncontact/projective.hpp"

#include "ncontact/error.hpp"

namespace ncontact {

std::array<std::size_t, 2> chart_coordinates(Chart chart) {
  switch (chart) {
    case Chart::Z:
      return {0, 1};
    case Chart::Y:
      return {0, 2};
    case Chart::X:
      return {1, 2};
  }
  return {0, 1};
}

std::array<std::string, 2> chart_variable_names(Chart chart) {
  const auto c = chart_coordinates(chart);
  const std::array<std::string, 3> lower{"x", "y", "z"};
  return {lower[c[0]], lower[c[1]]};
}

std::string chart_name(Chart chart) {
  switch (chart) {
    case Chart::Z:
      return "Z=1";
    case Chart::Y:
      return "Y=1";
    case Chart::X:
      return "X=1";
  }
  return "?";
}

TernaryForm homogenize(const BiPoly& p, int deg) {
  if (deg < p.total_degree())
    throw DegreeTooSmall("cannot homogenize a degree " + std::to_string(p.total_degree()) + " polynomial at degree " +
                         std::to_string(deg));
  TernaryForm out;
  for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], deg - e[0] - e[1]}, c);
  return out;
}

TernaryForm homogenize(const BiPoly& p) { return homogenize(p, std::max(p.total_degree(), 0)); }

BiPoly dehomogenize(const TernaryForm& form, Chart chart) {
  const auto c = chart_coordinates(chart);
  BiPoly out;
  for (const auto& [e, coeff] : form.terms()) out.add_term({e[c[0]], e[c[1]]}, coeff);
  return out;
}

}  // namespace ncontact
