#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncontact/error.hpp"
#include "ncontact/parse.hpp"
#include "ncontact/reproduce.hpp"
#include "ncontact/session.hpp"

using namespace ncontact;

namespace {
const char* kE6 = R"(# 6-torsion example, t = 3
curve E6: y^2 = x^3 + 1/4*x^2 - 3*x + 1
point T on E6 = (0, 1)
)";

const char* kFull = R"(curve E6: y^2 = x^3 + 1/4*x^2 - 3*x + 1
point T on E6 = (0, 1)
point Z on E6 = O
divisor D on E6 = { (0, 1): 1, (2, 2): 1 }
poly b = y - x*(x - 4) + 1   # b_d
poly q = x^3 + y^3 + 1
form C = X^2 + Y^2 + Z^2
torsion T
xi T 6
contact b T 6 smooth-fix q
construct D
smooth C
zariski 6 1,2,3,6
)";
}  // namespace

TEST_CASE("parse_session") {
  const Session s = parse_session(kE6);
  REQUIRE(s.declarations.size() == 2);
  CHECK(std::holds_alternative<CurveDecl>(s.declarations[0]));
  CHECK(std::get<PointDecl>(s.declarations[1]).point == EPoint::affine(std::get<CurveDecl>(s.declarations[0]).curve, 0, 1));
  CHECK(s.commands.empty());

  CHECK_THROWS_AS(parse_session("point P on E = (0, 1)"), UnknownName);
  CHECK_THROWS_AS(parse_session(std::string(kE6) + "point P on E6 = (1, 1)\n"), PointNotOnCurve);
  CHECK_THROWS_AS(parse_session("curve E: y^2 = x^3\n"), SingularCurve);
  CHECK_THROWS_AS(parse_session("curve E y^2 = x^3 + 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_session(std::string(kE6) + "point T on E6 = (0, -1)\n"), SyntaxError);
  CHECK_THROWS_AS(parse_session(std::string(kE6) + "frobnicate T\n"), SyntaxError);
  CHECK_THROWS_AS(parse_session(std::string(kE6) + "xi T\n"), SyntaxError);
  CHECK_THROWS_AS(parse_session(std::string(kE6) + "xi Q 6\n"), UnknownName);
  CHECK_THROWS_AS(parse_session("poly p = x +\n"), SyntaxError);
}

TEST_CASE("render round trip") {
  const Session s = parse_session(kFull);
  const std::string text = render(s);
  CHECK(parse_session(text) == s);
  CHECK(render(parse_session(text)) == text);
}

TEST_CASE("execute") {
  const auto result = execute(parse_session(kFull));
  CHECK(result.reports.size() == 6);
  CHECK(result.exit_code == 0);
  for (const auto& r : result.reports) CHECK(r.passed());
  CHECK(result.reports[0].get("order") == "6");
  CHECK(result.reports[2].render_text().find("all checks pass") != std::string::npos);

  // Determinism: identical text, identical bytes.
  const auto again = execute(parse_session(kFull));
  for (std::size_t i = 0; i < result.reports.size(); ++i)
    CHECK(again.reports[i].render_machine() == result.reports[i].render_machine());

  const auto cusp = execute(parse_session("form F = Z*Y^2 - X^3\nsmooth F\n"));
  CHECK(cusp.exit_code == 1);
  CHECK(cusp.reports[0].get("verdict") == "singular");

  const auto empty = execute(parse_session(kE6));
  CHECK(empty.exit_code == 0);
  CHECK(empty.reports.empty());

  CHECK_THROWS_AS(execute(parse_session(std::string(kE6) + "xi T 4\n")), Error);
}

TEST_CASE("reproduce") {
  const Report r = reproduce("5.1");
  CHECK(r.passed());
  CHECK(r.get("splitting_numbers") == "4,2,1");
  CHECK(r.get("verdict") == "Zariski triple");
  CHECK_THROWS_AS(reproduce("9.9"), UnknownSection);
  CHECK(reproduce("4.1").passed());
}

TEST_CASE("first_difference") {
  const BiPoly a = parse_bipoly("2*x^2 + 4*y"), b = parse_bipoly("x^2 + 2*y"), c = parse_bipoly("x^2 + 3*y");
  CHECK_FALSE(first_difference(a, b).has_value());
  const auto d = first_difference(a, c);
  REQUIRE(d.has_value());
  CHECK(d->find("coefficient of y") != std::string::npos);
}
