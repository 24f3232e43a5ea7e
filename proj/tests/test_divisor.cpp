#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncontact/division.hpp"
#include "ncontact/divisor.hpp"
#include "ncontact/error.hpp"
#include "test_helpers.hpp"

using namespace ncontact;
using namespace testing_helpers;

namespace {
EffectiveDivisor div_of(const EllipticCurve& e, std::initializer_list<std::tuple<Rational, Rational, int>> pts) {
  EffectiveDivisor d(e);
  for (const auto& [x, y, m] : pts) d.add(EPoint::affine(e, x, y), m);
  return d;
}
FunctionRep F(const char* text, const EllipticCurve& e) { return FunctionRep::from_poly(P(text), e); }
}  // namespace

TEST_CASE("decompose") {
  const auto e = e6();
  auto dec = decompose(div_of(e, {{0, 1, 1}, {0, -1, 1}}));
  CHECK(dec.semi_reduced.empty());
  REQUIRE(dec.fibers.size() == 1);
  CHECK(dec.fibers[0] == Fiber{0, 1});

  dec = decompose(div_of(e4(), {{0, 0, 3}}));
  CHECK(dec.semi_reduced == div_of(e4(), {{0, 0, 1}}));
  REQUIRE(dec.fibers.size() == 1);
  CHECK(dec.fibers[0] == Fiber{0, 1});
  CHECK(dec.semi_reduced + dec.fiber_divisor() == div_of(e4(), {{0, 0, 3}}));

  const auto d = div_of(e, {{0, 1, 2}});
  dec = decompose(d);
  CHECK(dec.semi_reduced == d);
  CHECK(dec.fibers.empty());
  CHECK(is_semi_reduced(d));
}

TEST_CASE("divisor_gcd") {
  const auto e = e6();
  const auto d1 = div_of(e, {{0, 1, 2}, {2, 2, 1}});
  const auto d2 = div_of(e, {{0, 1, 1}});
  CHECK(divisor_gcd(d1, d2) == d2);
  CHECK(divisor_gcd(d1, d1) == d1);
  CHECK(divisor_gcd(d1, EffectiveDivisor(e)).empty());
  CHECK_THROWS_AS(divisor_gcd(d1, EffectiveDivisor(e4())), CurveMismatch);
}

TEST_CASE("divisor_sum_point") {
  const auto e = e6();
  CHECK(divisor_sum_point(div_of(e, {{0, 1, 3}})) == EPoint::affine(e, -2, 0));
  CHECK(divisor_sum_point(div_of(e, {{0, 1, 1}, {0, -1, 1}})).is_infinity());
  CHECK(divisor_sum_point(div_of(e, {{0, 1, 1}, {2, 2, 1}})) == EPoint::affine(e, -2, 0));
}

TEST_CASE("construct_b") {
  const auto e = curve_of("x^3 + 1");
  auto b = construct_b(div_of(e, {{0, 1, 1}, {2, 3, 1}}));
  CHECK(b.to_poly() == P("y - x - 1"));
  REQUIRE(b.p_o.has_value());
  CHECK(*b.p_o == EPoint::affine(e, -1, 0));

  const auto e2c = e2();
  b = construct_b(div_of(e2c, {{0, 0, 1}, {1, 0, 1}}));
  CHECK(b.to_poly() == P("y"));
  CHECK(*b.p_o == EPoint::affine(e2c, -1, 0));

  const auto t = EPoint::affine(e6(), 0, 1);
  b = construct_b(div_of(e6(), {{0, 1, 1}}));
  CHECK(b.to_poly() == P("x"));
  CHECK(*b.p_o == neg(t));

  // Repeated point: tangent line at T on E6(3), residual iota([2]T).
  b = construct_b(div_of(e6(), {{0, 1, 2}}));
  CHECK(canonical_scalar(b.to_poly()) == canonical_scalar(tangent_line(t)));
  CHECK(*b.p_o == neg(scalar_mul(2, t)));

  CHECK_THROWS_AS(construct_b(div_of(e6(), {{0, 1, 1}, {0, -1, 1}})), InvalidArgument);
  CHECK(construct_b_degree_bounds(3) == std::make_pair(2, 0));
  CHECK(construct_b_degree_bounds(2) == std::make_pair(1, 0));
  CHECK(construct_b_degree_bounds(4) == std::make_pair(2, 1));
}

TEST_CASE("norm") {
  CHECK(norm(F("y", e6())) == -e6().f());
  CHECK(norm(F("x^2 - 4*x + 9 - 2*y", e4())) == U("(x - 3)^4"));
  CHECK(norm(F("y - x - 1", curve_of("x^3 + 1"))) == U("-x*(x - 2)*(x + 1)"));
}

TEST_CASE("zero_divisor_rational") {
  const auto e = curve_of("x^3 + 1");
  auto z = zero_divisor_rational(F("y - x - 1", e));
  CHECK(z.divisor == div_of(e, {{0, 1, 1}, {2, 3, 1}, {-1, 0, 1}}));
  CHECK(z.unresolved == U("1"));

  z = zero_divisor_rational(F("x - 3", e4()));
  CHECK(z.divisor == div_of(e4(), {{3, 3, 1}, {3, -3, 1}}));
  CHECK(z.unresolved == U("1"));

  z = zero_divisor_rational(F("x^2 - 4*x + 9 - 2*y", e4()));
  CHECK(z.divisor == div_of(e4(), {{3, 3, 4}}));
  CHECK(z.unresolved == U("1"));

  // Ramified point: x vanishes to order 2 at (0, 0).
  z = zero_divisor_rational(F("x", e4()));
  CHECK(z.divisor == div_of(e4(), {{0, 0, 2}}));

  z = zero_divisor_rational(F("y + x^2 - x", e2()));
  CHECK(z.divisor == div_of(e2(), {{0, 0, 1}, {1, 0, 1}}));
  CHECK(z.unresolved == U("x^2 - 2*x - 1"));
}

TEST_CASE("mumford_pair") {
  const auto e = curve_of("x^3 + 1");
  const auto d = div_of(e, {{0, 1, 1}, {2, 3, 1}, {-1, 0, 1}});
  const auto m = mumford_pair(d, F("y - x - 1", e));
  CHECK(m.u == U("x*(x - 2)*(x + 1)"));
  CHECK(m.v == U("x + 1"));

  const auto m4 = mumford_pair(div_of(e4(), {{3, 3, 1}}), F("y - (x - 3)*(x - 2) - 3", e4()));
  CHECK(m4.u == U("x - 3"));
  CHECK(m4.v == U("3"));

  CHECK_THROWS_AS(mumford_pair(div_of(e4(), {{3, 3, 1}}), F("x - 3", e4())), ShapeError);
  CHECK_THROWS_AS(mumford_pair(div_of(e4(), {{3, 3, 1}}), F("y - 5", e4())), InvalidRepresentation);
}

TEST_CASE("verify_prop14") {
  const auto e = curve_of("x^3 + 1");
  const auto d = div_of(e, {{0, 1, 1}, {2, 3, 1}});
  auto r = verify_prop14(d, construct_b(d));
  CHECK(r.passed());
  CHECK(r.get("nu") == "0");

  const auto single = div_of(e6(), {{0, 1, 1}});
  r = verify_prop14(single, construct_b(single));
  CHECK(r.passed());
  CHECK(r.get("nu") == "1");

  FunctionRep wrong = F("x - 5", e6());
  r = verify_prop14(single, wrong);
  CHECK_FALSE(r.passed());
  CHECK(r.get("check.zero_divisor") == "fail");
}

TEST_CASE("function arithmetic") {
  const auto e = e6();
  const auto g = F("y - x", e), h = F("x*y + 2", e);
  CHECK(multiply(g, h).to_poly() == nf1(P("(y - x)*(x*y + 2)"), e.f()));
  CHECK(power(g, 3).to_poly() == nf1(P("(y - x)^3"), e.f()));
  CHECK(g.conjugate().to_poly() == P("-y - x"));
  CHECK(F("y + x^2", e).pole_order() == 4);
  CHECK(F("x*y + 1", e).pole_order() == 5);
  CHECK(F("x*y + x^3", e).projective_degree() == 3);
}
