#include "ncontact/contact.hpp"

#include "ncontact/division.hpp"
#include "ncontact/error.hpp"

namespace ncontact {

namespace {

void require_order(const EPoint& t, int n) {
  if (n < 1) throw WrongOrder("torsion order must be positive");
  if (t.is_infinity()) throw WrongOrder("T must be an affine point");
  const auto ord = order_of(t, std::max(n, 24));
  if (!ord || *ord != n)
    throw WrongOrder("point " + t.to_string() + " has order " + (ord ? std::to_string(*ord) : "> bound") +
                     ", expected " + std::to_string(n));
}

FunctionRep from_line(const BiPoly& line, const EllipticCurve& e) { return FunctionRep::from_poly(line, e); }

FunctionRep divide_by_x_poly(const FunctionRep& g, const UniPoly& v) {
  return FunctionRep{exact_quotient(g.b0, v), exact_quotient(g.b1, v), g.curve, std::nullopt};
}

struct MillerState {
  // g has divisor k T + iota([k]T) - (k + 1) O while [k]T != O, and
  // k T - k O once [k]T = O.
  FunctionRep g;
  EPoint point;
};

MillerState combine(const MillerState& a, const MillerState& b) {
  const EllipticCurve& e = a.g.curve;
  const EPoint sum = add(a.point, b.point);
  const FunctionRep prod = multiply(a.g, b.g);
  if (sum.is_infinity()) {
    // The vertical line through a.point carries a.point + b.point - 2 O.
    return {divide_by_x_poly(prod, UniPoly::linear_factor(a.point.x())), sum};
  }
  const BiPoly line = a.point == b.point ? tangent_line(a.point) : chord_line(a.point, b.point);
  const FunctionRep with_line = multiply(prod, from_line(line, e));
  const UniPoly verticals = UniPoly::linear_factor(a.point.x()) * UniPoly::linear_factor(b.point.x());
  return {divide_by_x_poly(with_line, verticals), sum};
}

}  // namespace

FunctionRep build_xi(const EllipticCurve& curve, const EPoint& t, int n) {
  if (!(t.curve() == curve)) throw CurveMismatch("T is not on the given curve");
  require_order(t, n);
  const MillerState base{FunctionRep{UniPoly::linear_factor(t.x()), UniPoly{}, curve, std::nullopt}, t};
  MillerState acc = base;
  int top = 31;
  while (!((n >> top) & 1)) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = combine(acc, acc);
    if ((n >> bit) & 1) acc = combine(acc, base);
  }
  FunctionRep xi = canonical(acc.g);
  return xi;
}

FunctionRep weak_contact(const FunctionRep& b_d, const EPoint& t, int n) {
  if (!(b_d.curve == t.curve())) throw CurveMismatch("b_d and T live on different curves");
  const FunctionRep xi = build_xi(b_d.curve, t, n);
  const FunctionRep c = multiply(power(b_d, static_cast<unsigned>(n)), xi);
  const BiPoly vertical = pow(bx() - BiPoly::constant(t.x()), static_cast<unsigned>(n));
  const BiPoly quotient = exact_divide(c.to_poly(), vertical);
  return canonical(FunctionRep::from_poly(quotient, b_d.curve));
}

ContactResult contact_from_weak(const FunctionRep& b_nd, int n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("contact_from_weak needs positive n and d");
  if ((n * d) % 3 != 0)
    throw DegreeMismatch("n d = " + std::to_string(n * d) + " is not divisible by 3; no contact curve of degree nd/3");
  ContactResult res{b_nd, nf2(b_nd.to_poly(), b_nd.curve.f()), n, d, Report("contact curve")};
  const int r = n * d / 3;
  res.report.add("n", std::to_string(n));
  res.report.add("d", std::to_string(d));
  res.report.add("degree", std::to_string(r));
  res.report.add_check("avoids_O", sgn(res.h_nd.coeff({0, r})) != 0);
  res.report.add_check("degree", res.h_nd.total_degree() == r);
  res.report.add_check("same_class", nf1(res.h_nd, b_nd.curve.f()) == b_nd.to_poly());
  return res;
}

Report verify_contact(const ContactResult& res, const FunctionRep& b_d, const EPoint& t) {
  Report r("contact verification");
  const EllipticCurve& e = b_d.curve;
  const int n = res.n, d = res.d;
  const int deg = n * d / 3;

  const UniPoly lhs = norm(res.b_nd) * pow(UniPoly::linear_factor(t.x()), static_cast<unsigned>(n));
  const UniPoly rhs = pow(norm(b_d), static_cast<unsigned>(n));
  bool identity = !lhs.is_zero() && !rhs.is_zero();
  Rational c = 0;
  if (identity) {
    c = lhs.leading() / rhs.leading();
    identity = lhs == rhs * c;
  }
  r.add("scalar_c", to_string(c));
  r.add_check("norm_identity", identity);

  r.add("degree", std::to_string(deg));
  r.add_check("avoids_O", (n * d) % 3 == 0 && sgn(res.h_nd.coeff({0, deg})) != 0);
  r.add_check("degree", res.h_nd.total_degree() == deg);
  r.add_check("same_class", nf1(res.h_nd, e.f()) == res.b_nd.to_poly());

  const int d1 = res.b_nd.projective_degree();
  const int s = 3 * d1 - n * d;
  r.add("weak_degree", std::to_string(d1));
  r.add("weak_O_multiplicity", std::to_string(s));
  r.add_check("weak_O_multiplicity", s >= 0);

  const auto base_zeros = zero_divisor_rational(b_d);
  const EPoint it = neg(t);
  if (base_zeros.unresolved.degree() == 0 && base_zeros.divisor.multiplicity(it) > 0) {
    EffectiveDivisor dd(e);
    for (const auto& [p, m] : base_zeros.divisor.points()) {
      const int k = p == it ? m - 1 : m;
      if (k > 0) dd.add(p, k);
    }
    const auto contact_zeros = zero_divisor_rational(res.b_nd);
    r.add("support", "rational");
    r.add("contact_divisor", contact_zeros.divisor.to_string());
    r.add_check("contact_divisor",
                contact_zeros.unresolved.degree() == 0 && contact_zeros.divisor == dd.scaled(n));
  } else {
    r.add("support", "irrational");
  }
  return r;
}

ContactResult run_contact(const FunctionRep& b_d, const EPoint& t, int n) {
  const int d = b_d.pole_order() - 1;
  const FunctionRep b_nd = weak_contact(b_d, t, n);
  ContactResult res = contact_from_weak(b_nd, n, d);
  Report verification = verify_contact(res, b_d, t);
  Report combined("contact n=" + std::to_string(n) + " d=" + std::to_string(d));
  combined.add("b_d", to_string(b_d.to_poly()));
  combined.add("T", t.to_string());
  combined.add("b_nd", to_string(res.b_nd.to_poly()));
  combined.add("h_nd", to_string(res.h_nd));
  combined.merge(verification);
  res.report = std::move(combined);
  return res;
}

BiPoly smoothing_fix(const BiPoly& h, const EllipticCurve& curve, const BiPoly& q) { return h + q * curve.relation(); }

}  // namespace ncontact
