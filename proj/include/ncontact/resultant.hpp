#pragma once

#include <vector>

#include "ncontact/sparse_poly.hpp"
#include "ncontact/unipoly.hpp"

namespace ncontact {

/// Determinant of a square matrix with entries in Q[x], by fraction-free
/// (Bareiss) elimination.
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

/// Resultant with respect to y, as the Sylvester determinant of the
/// coefficient lists of g and h in y. When exactly one argument has y-degree
/// zero, the convention Res(g, c) = c^deg_y(g) (and symmetrically) applies.
/// A zero argument yields 0; BothConstantInY when neither involves y.
UniPoly resultant_y(const BiPoly& g, const BiPoly& h);

}  // namespace ncontact
