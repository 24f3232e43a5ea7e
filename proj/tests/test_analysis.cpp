#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncontact/analysis.hpp"
#include "ncontact/groebner.hpp"
#include "ncontact/contact.hpp"
#include "ncontact/division.hpp"
#include "ncontact/error.hpp"
#include "test_helpers.hpp"

using namespace ncontact;
using namespace testing_helpers;

namespace {
TernaryForm T(const char* text) { return parse_ternary(text); }
}

TEST_CASE("is_smooth_projective") {
  CHECK(is_smooth_projective(T("X^2 + Y^2 + Z^2")).smooth);
  auto v = is_smooth_projective(T("Z*Y^2 - X^3"));
  CHECK_FALSE(v.smooth);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->chart == Chart::Z);
  CHECK(witness_contains(*v.witness, 0, 0));
  CHECK_FALSE(is_unit_ideal(v.witness->basis));
  CHECK(is_smooth_projective(homogenize(curve_relation(e6().f()))).smooth);
  CHECK_THROWS_AS(is_smooth_projective(T("X^2 + Y")), NotHomogeneous);

  // Node at [1, 0, 0] only: visible in the X = 1 chart.
  v = is_smooth_projective(T("Y*Z*X - Y^3 - Z^3"));
  CHECK_FALSE(v.smooth);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->chart == Chart::X);
  CHECK(is_singular_at(T("Y*Z*X - Y^3 - Z^3"), {Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("smoothness of the 4-torsion contact curve and its fix") {
  const auto e = e4();
  const auto res = run_contact(FunctionRep::from_poly(P("y - (x - 3)*(x - 2) + 3"), e), EPoint::affine(e, 3, 3), 4);
  const auto h = homogenize(res.h_nd);
  const auto v = is_smooth_projective(h);
  CHECK_FALSE(v.smooth);
  CHECK(is_singular_at(h, {Rational(1), Rational(0), Rational(0)}));
  CHECK(is_smooth_projective(homogenize(smoothing_fix(res.h_nd, e, P("x + y + 1")))).smooth);

  const auto choice = auto_smoothing_fix(res.h_nd, e);
  REQUIRE(choice.has_value());
  CHECK(choice->q.total_degree() <= 1);
  CHECK(is_smooth_projective(homogenize(choice->h_smooth)).smooth);
}

TEST_CASE("smoothness invariance") {
  const TernaryForm f = T("X^3 + Y^3 + Z^3 - 3*X*Y*Z + X^2*Y");
  const bool base = is_smooth_projective(f).smooth;
  CHECK(is_smooth_projective(f * Rational(-7, 3)).smooth == base);
  const TernaryForm swapped = T("Y^3 + X^3 + Z^3 - 3*Y*X*Z + Y^2*X");
  CHECK(is_smooth_projective(swapped).smooth == base);
  const TernaryForm node = T("Y^2*Z - X^2*(X + Z)");
  CHECK_FALSE(is_smooth_projective(node).smooth);
  CHECK_FALSE(is_smooth_projective(T("X^2*Z - Y^2*(Y + Z)")).smooth);
  CHECK_FALSE(is_smooth_projective(T("Y^2*X - Z^2*(Z + X)")).smooth);
}

TEST_CASE("splitting_number") {
  CHECK(splitting_number(4, 1) == 4);
  CHECK(splitting_number(4, 2) == 2);
  CHECK(splitting_number(6, 3) == 2);
  CHECK(splitting_number(6, 2) == 3);
  CHECK_THROWS_AS(splitting_number(8, 3), NotDivisible);
  for (int n = 1; n <= 24; ++n) {
    CHECK(splitting_number(n, n) == 1);
    CHECK(splitting_number(n, 1) == n);
  }
}

TEST_CASE("pencil_member") {
  const auto a = T("X^2"), b = T("Y^2");
  CHECK(pencil_member(1, 0, a, b) == a);
  CHECK(pencil_member(0, 1, a, b) == b);
  CHECK(pencil_member(1, 1, a, b) == T("X^2 + Y^2"));
  CHECK_THROWS_AS(pencil_member(0, 0, a, b), ZeroParameters);
  CHECK_THROWS_AS(pencil_member(1, 1, a, T("Y^3")), DegreeMismatch);
}

TEST_CASE("pencil restriction depends only on lambda") {
  // lambda (h^2) + mu (E Q) on the 4-torsion curve with n = 8, d = 4.
  const auto e = e4();
  const auto res = run_contact(FunctionRep::from_poly(P("y - (x - 3)*(x - 2) + 3"), e), EPoint::affine(e, 3, 3), 4);
  const BiPoly h = smoothing_fix(res.h_nd, e, P("x + y + 1"));
  const TernaryForm a = homogenize(pow(h, 2), 8);
  const TernaryForm b = homogenize(curve_relation(e.f()) * P("x^5 - y^5 + 3*x*y + 1"), 8);
  const BiPoly base = nf1(dehomogenize(pencil_member(1, 0, a, b), Chart::Z), e.f());
  for (Rational mu : {Rational(1), Rational(-2, 3), Rational(5)})
    CHECK(nf1(dehomogenize(pencil_member(1, mu, a, b), Chart::Z), e.f()) == base);
}

TEST_CASE("zariski_verdict") {
  auto z = zariski_verdict(4, {{"D1", 1}, {"D2", 2}, {"D3", 4}});
  CHECK(z.distinguished);
  CHECK(z.tuple_name() == "triple");
  CHECK(z.entries[0].splitting == 4);
  CHECK(z.entries[2].splitting == 1);

  z = zariski_verdict(6, {{"D1", 1}, {"D2", 2}, {"D3", 3}, {"D4", 6}});
  CHECK(z.distinguished);
  CHECK(z.tuple_name() == "quartet");
  CHECK(z.to_report().get("splitting_numbers") == "6,3,2,1");

  z = zariski_verdict(8, {{"D1", 1}, {"D2", 2}, {"D3", 2}});
  CHECK_FALSE(z.distinguished);
  CHECK(z.to_report().get("verdict") == "not distinguished");
  CHECK_THROWS_AS(zariski_verdict(8, {{"D1", 3}}), NotDivisible);

  // Order independence.
  CHECK(zariski_verdict(8, {{"a", 8}, {"b", 1}, {"c", 4}, {"d", 2}}).distinguished);
  CHECK(zariski_verdict(8, {{"a", 2}, {"b", 4}, {"c", 1}, {"d", 8}}).distinguished);
  CHECK(z.render_table().find("not distinguished") != std::string::npos);
}
