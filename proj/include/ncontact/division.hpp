#pragma once

#include <vector>

#include "ncontact/sparse_poly.hpp"
#include "ncontact/unipoly.hpp"

namespace ncontact {

/// Monomial orders on k[x, y]. The two lex orders are the ones used for the
/// normal forms; GradedXoverY (total degree, ties by x-degree) is offered for
/// Groebner computations where degree-compatible orders are cheaper.
enum class MonomialOrder { LexYoverX, LexXoverY, GradedXoverY };

/// True when monomial a is strictly greater than b under `order`.
bool monomial_greater(MonomialOrder order, const Exponents<2>& a, const Exponents<2>& b);

/// Largest monomial of a nonzero polynomial.
Exponents<2> leading_monomial(const BiPoly& p, MonomialOrder order);

struct DivisionResult {
  std::vector<BiPoly> quotients;
  BiPoly remainder;
};

/// Multivariate division: g = sum q_i d_i + r where no term of r is divisible
/// by a leading term of any d_i. Divisors are tried in sequence order.
DivisionResult divmod_multi(const BiPoly& g, const std::vector<BiPoly>& divisors, MonomialOrder order);

/// Throws InvalidCurvePoly unless f is monic of odd degree >= 3.
void require_curve_poly(const UniPoly& f);

/// Remainder of g modulo y^2 - f under LexYoverX: y-degree at most 1.
BiPoly nf1(const BiPoly& g, const UniPoly& f);

/// Remainder of g modulo y^2 - f under LexXoverY: x-degree below deg f.
BiPoly nf2(const BiPoly& g, const UniPoly& f);

/// q with g == q * h; NotDivisible when h does not divide g.
BiPoly exact_divide(const BiPoly& g, const BiPoly& h);

/// y^2 - f(x)
BiPoly curve_relation(const UniPoly& f);

}  // namespace ncontact
