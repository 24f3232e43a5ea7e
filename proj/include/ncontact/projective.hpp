#pragma once

#include <array>
#include <string>

#include "ncontact/sparse_poly.hpp"

namespace ncontact {

/// Standard affine charts of P^2, named by the coordinate set to 1.
enum class Chart { Z, Y, X };

/// Remaining coordinates in a chart, in order: Z -> (X, Y), Y -> (X, Z),
/// X -> (Y, Z).
std::array<std::size_t, 2> chart_coordinates(Chart chart);
std::array<std::string, 2> chart_variable_names(Chart chart);
std::string chart_name(Chart chart);

/// x^i y^j -> X^i Y^j Z^(deg - i - j). DegreeTooSmall when deg is below the
/// total degree of p.
TernaryForm homogenize(const BiPoly& p, int deg);
/// Homogenizes at the total degree of p.
TernaryForm homogenize(const BiPoly& p);

/// Sets the chart coordinate to 1; the remaining coordinates become the
/// first and second variables of the result.
BiPoly dehomogenize(const TernaryForm& form, Chart chart);

}  // namespace ncontact
