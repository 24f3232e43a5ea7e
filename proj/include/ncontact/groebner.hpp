#pragma once

#include <vector>

#include "ncontact/division.hpp"
#include "ncontact/sparse_poly.hpp"

namespace ncontact {

/// Reduced Groebner basis of the ideal generated by `gens` under `order`:
/// monic leading coefficients, no term of any element divisible by another
/// element's leading monomial, sorted by leading monomial ascending. The unit
/// ideal yields {1}. Throws InvalidArgument when all generators are zero.
std::vector<BiPoly> buchberger(const std::vector<BiPoly>& gens, MonomialOrder order);

/// S-polynomial of f and g under `order`.
BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, MonomialOrder order);

/// Full reduction of p by `basis` (remainder of divmod_multi).
BiPoly reduce(const BiPoly& p, const std::vector<BiPoly>& basis, MonomialOrder order);

bool is_unit_ideal(const std::vector<BiPoly>& basis);

}  // namespace ncontact
