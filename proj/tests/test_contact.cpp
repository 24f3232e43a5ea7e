#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncontact/contact.hpp"
#include "ncontact/division.hpp"
#include "ncontact/error.hpp"
#include "ncontact/projective.hpp"
#include "test_helpers.hpp"

using namespace ncontact;
using namespace testing_helpers;

namespace {
FunctionRep F(const char* text, const EllipticCurve& e) { return FunctionRep::from_poly(P(text), e); }
bool same_up_to_scalar(const BiPoly& a, const BiPoly& b) { return canonical_scalar(a) == canonical_scalar(b); }
BiPoly vertical(const EPoint& p) { return BiPoly::variable(0) - BiPoly::constant(p.x()); }
}  // namespace

TEST_CASE("build_xi examples") {
  CHECK(same_up_to_scalar(build_xi(e4(), EPoint::affine(e4(), 3, 3), 4).to_poly(), P("x^2 - 4*x + 9 - 2*y")));
  CHECK(same_up_to_scalar(build_xi(e6(), EPoint::affine(e6(), 0, 1), 6).to_poly(),
                          P("2*x^3 + 4*x^2 + 4*x*y - 7*x - 2*y + 2")));
  const auto e2c = curve_of("(x - 2)*(x^2 + x + 5)");
  CHECK(same_up_to_scalar(build_xi(e2c, EPoint::affine(e2c, 2, 0), 2).to_poly(), P("x - 2")));
  CHECK(same_up_to_scalar(build_xi(e3(), EPoint::affine(e3(), 0, 1), 3).to_poly(), P("y - x - 1")));
  CHECK_THROWS_AS(build_xi(e6(), EPoint::affine(e6(), 0, 1), 3), WrongOrder);
  CHECK_THROWS_AS(build_xi(e6(), EPoint::affine(e6(), 2, 2), 6), WrongOrder);
}

TEST_CASE("build_xi agrees with the tangent-line ladder for n = 6") {
  // xi = NF1(l^3 l1) / (x - x_[2]T)^3, l tangent at T, l1 tangent at [2]T.
  for (Rational t : {Rational(3), Rational(5), Rational(-2), Rational(1, 3)}) {
    const Bindings b{{"t", t}};
    const auto e = EllipticCurve::from_poly(
        parse_unipoly("x^3 - (3/4*t^2 - 3*t + 2)*x^2 + 1/2*(-t^2 + 3*t - 2)*t*x + 1/4*(-t^2 + 3*t - 2)^2", "x", b));
    const auto T = EPoint::affine(e, 0, (t - 1) * (t - 2) / 2);
    const auto t2 = scalar_mul(2, T);
    const BiPoly l = tangent_line(T), l1 = tangent_line(t2);
    const BiPoly ladder = exact_divide(nf1(pow(l, 3) * l1, e.f()), pow(vertical(t2), 3));
    CHECK(same_up_to_scalar(ladder, build_xi(e, T, 6).to_poly()));
  }
}

TEST_CASE("build_xi agrees with the tangent-line ladder for n = 8") {
  // xi = NF1(l^4 l1^2) / ((x - x_[2]T)^4 (x - x_[4]T)).
  for (Rational t : {Rational(-1), Rational(2), Rational(3), Rational(-1, 3)}) {
    const Bindings b{{"t", t}};
    const auto e = EllipticCurve::from_poly(parse_unipoly(
        "(x - t^4 + t^3)*(x^2 - (2*t^3 - 4*t^2 + 2*t - 1/4)*x - t^6 + 2*t^5 - 5/4*t^4 + 1/4*t^3)", "x", b));
    const auto T = EPoint::affine(e, 0, -pow(t, 5) + Rational(3, 2) * pow(t, 4) - pow(t, 3) / 2);
    const auto t2 = scalar_mul(2, T), t4 = scalar_mul(4, T);
    const BiPoly l = tangent_line(T), l1 = tangent_line(t2);
    const BiPoly ladder = exact_divide(nf1(pow(l, 4) * pow(l1, 2), e.f()), pow(vertical(t2), 4) * vertical(t4));
    CHECK(same_up_to_scalar(ladder, build_xi(e, T, 8).to_poly()));
  }
}

TEST_CASE("weak_contact") {
  const auto e = e2();
  const auto w = weak_contact(F("y + x^2 - x", e), EPoint::affine(e, 0, 0), 2);
  CHECK(same_up_to_scalar(w.to_poly(), P("x^3 - x^2 + x - 1 + 2*(x - 1)*y")));

  const auto w6 = weak_contact(F("y - x*(x - 4) + 1", e6()), EPoint::affine(e6(), 0, 1), 6);
  CHECK(same_up_to_scalar(
      w6.to_poly(),
      P("128*x^9 - 2432*x^8 - 512*x^7*y + 24864*x^7 + 8832*x^6*y - 173184*x^6 - 57024*x^5*y + 738248*x^5 "
        "+ 107168*x^4*y - 1310712*x^4 + 590592*x^3*y - 1918138*x^3 - 3714312*x^2*y + 11061932*x^2 + 7111844*x*y "
        "- 12378399*x - 3541074*y + 3545170")));

  // b_d vanishing at iota(T') for a different T' leaves a remainder.
  CHECK_THROWS_AS(weak_contact(F("y - x*(x - 4) + 1", e6()), EPoint::affine(e6(), 0, -1), 6), NotDivisible);
}

TEST_CASE("contact_from_weak") {
  const auto e = e2();
  const auto w = weak_contact(F("y + x^2 - x", e), EPoint::affine(e, 0, 0), 2);
  const auto res = contact_from_weak(w, 2, 3);
  CHECK(same_up_to_scalar(res.h_nd, P("y^2 + 2*x*y - x^2 - 2*y + 2*x - 1")));
  CHECK(res.h_nd.degree_in(0) <= 2);
  CHECK(nf1(res.h_nd, e.f()) == w.to_poly());
  CHECK(res.report.passed());
  CHECK_THROWS_AS(contact_from_weak(w, 2, 2), DegreeMismatch);

  const auto r6 = run_contact(F("y - x*(x - 4) + 1", e6()), EPoint::affine(e6(), 0, 1), 6);
  CHECK(r6.h_nd.coeff({0, 0}) == Rational(-68872271, 32));
  CHECK(same_up_to_scalar(r6.h_nd, P("68872271/32 - 2528*x^2*y^4 - 512*x*y^5 + 128*y^6 - 64608*x^2*y^3 + 27256*x*y^4 "
                                     "+ 9088*y^5 + 1997169/2*y^2*x^2 + 177536*y^3*x - 201632*y^4 - 3294680*x^2*y "
                                     "- 21965953/8*y^2*x + 352704*y^3 + 448707487/128*x^2 + 8047460*x*y "
                                     "+ 51021297/32*y^2 - 194729737/32*x - 3902866*y")));
}

TEST_CASE("verify_contact") {
  const auto e = e2();
  const auto b_d = F("y + x^2 - x", e);
  const auto t = EPoint::affine(e, 0, 0);
  const auto res = run_contact(b_d, t, 2);
  const Report r = verify_contact(res, b_d, t);
  CHECK(r.passed());
  CHECK(r.get("check.norm_identity") == "pass");
  CHECK(norm(res.b_nd) * U("x^2") == pow(norm(b_d), 2) * Rational(r.get("scalar_c")));

  const auto r6 = run_contact(F("y - x*(x - 4) + 1", e6()), EPoint::affine(e6(), 0, 1), 6);
  for (const char* k : {"check.norm_identity", "check.avoids_O", "check.degree"}) CHECK(r6.report.get(k) == "pass");
  CHECK(r6.report.get("degree") == "6");

  ContactResult tampered = res;
  tampered.h_nd += P("y^2");
  CHECK_FALSE(verify_contact(tampered, b_d, t).passed());
  ContactResult tampered_b = res;
  tampered_b.b_nd.b0 += UniPoly::constant(1);
  CHECK_FALSE(verify_contact(tampered_b, b_d, t).passed());
}

TEST_CASE("rational support gives the exact contact divisor") {
  // Degree-3 divisors built from the torsion of y^2 = x^3 + 1 (cyclic of
  // order 6): every zero is rational, so the contact divisor is checked
  // point by point.
  const auto e = curve_of("x^3 + 1");
  const std::vector<EPoint> pts{EPoint::affine(e, 0, 1), EPoint::affine(e, 0, -1), EPoint::affine(e, 2, 3),
                                EPoint::affine(e, 2, -3), EPoint::affine(e, -1, 0)};
  int runs = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      for (std::size_t k = j; k < pts.size(); ++k) {
        EffectiveDivisor d(e);
        d.add(pts[i]);
        d.add(pts[j]);
        d.add(pts[k]);
        if (!is_semi_reduced(d)) continue;
        const EPoint t = divisor_sum_point(d);
        if (t.is_infinity()) continue;
        std::optional<FunctionRep> b_d;
        try {
          b_d = construct_b(d);
        } catch (const DegenerateSystem&) {
          continue;
        }
        const auto res = run_contact(*b_d, t, *order_of(t));
        CHECK(res.report.get("check.contact_divisor") == "pass");
        CHECK(res.report.passed());
        ++runs;
      }
  CHECK(runs > 0);
}

TEST_CASE("smoothing_fix") {
  const auto e = e6();
  const BiPoly h = P("x*y + 1");
  CHECK(smoothing_fix(h, e, BiPoly{}) == h);
  const BiPoly fixed = smoothing_fix(h, e, P("x^3 + y^3 + 1"));
  CHECK(nf1(fixed, e.f()) == nf1(h, e.f()));
  CHECK(fixed - h == P("x^3 + y^3 + 1") * curve_relation(e.f()));
}

TEST_CASE("homogenize / dehomogenize") {
  CHECK(homogenize(P("y^2 - x^3 + 1"), 3) == parse_ternary("Y^2*Z - X^3 + Z^3"));
  CHECK(dehomogenize(parse_ternary("Y^2*Z - X^3 + Z^3"), Chart::Z) == P("y^2 - x^3 + 1"));
  CHECK(dehomogenize(parse_ternary("Y^2*Z - X^3 + Z^3"), Chart::X) == P("x^2*y - 1 + y^3"));
  CHECK_THROWS_AS(homogenize(P("x"), 0), DegreeTooSmall);
  CHECK(homogenize(P("x + 1"), 2) == parse_ternary("X*Z + Z^2"));
}
