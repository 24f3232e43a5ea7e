#include "ncontact/reproduce.hpp"

#include <array>
#include <set>

#include "ncontact/analysis.hpp"
#include "ncontact/contact.hpp"
#include "ncontact/error.hpp"
#include "ncontact/parse.hpp"
#include "ncontact/projective.hpp"

namespace ncontact {

namespace {

// Worked-example polynomials, transcribed with explicit '*'. Free symbols are
// family parameters bound at parse time.
namespace fixture {

// 2-torsion family; T = (x_o, 0).
constexpr const char* kF2 = "(x - x_o)*(x^2 + c1*x + c2)";
constexpr const char* kB2 = "y + a*(x - x_o)*(x - b)";
constexpr const char* kXi2 = "x - x_o";
constexpr const char* kH2 =
    "(- 2*a^2*b - a^2*c1 + 1)*x^2 + 2*a*x*y + (a^2*b^2 + 2*a^2*b*x_o + a^2*c1*x_o - a^2*c2 + c1)*x + a^2*y^2 "
    "- 2*a*b*y - a^2*b^2*x_o + a^2*c2*x_o + c2";

// 3-torsion family with m = n = r = 1. The displayed b_3d and h_3d come
// out of the conjugate torsion point (x_o, -(x_o + 1)), whose xi is
// y + x + 1; the matching b_d is y - (x - x_o)(x - s) - x_o - 1.
constexpr const char* kF3 = "(x - x_o)^3 + (x + 1)^2";
constexpr const char* kB3 = "y - (x - x_o)*(x - s) - x_o - 1";
constexpr const char* kXi3 = "x + 1 + y";
constexpr const char* kB3d =
    "s^3*x + s^3*y - 6*s^2*x*x_o - 3*s^2*x*y + 3*s^2*x_o^2 - 3*s*x^3 + 12*s*x^2*x_o + 3*s*x^2*y - 6*s*x*x_o^2 "
    "+ 2*x^4 - 6*x^3*x_o - x^3*y + 3*x^2*x_o^2 + s^3 + 3*s^2*y - 9*s*x*x_o - 3*s*x*y + 6*s*x_o^2 - 3*s*x_o*y "
    "+ 6*x^2*x_o - 3*x*x_o^2 + 3*x*x_o*y - x_o^3 + 3*s^2 - 6*s*x + 3*s*x_o + 3*s*y + 5*x^2 - 6*x*x_o - 2*x*y "
    "+ 3*x_o^2 - 3*x_o*y + 3*s - x + 3*x_o - y + 3";
constexpr const char* kH3d =
    "x^2*y*(3*s - 3*x_o + 1) + x^2*(3*s*x_o - 3*x_o^2 + 3*s + 3) + 2*x*y^2 + x*y*(- 3*s^2 + 3*x_o^2 - 3*s + 3*x_o) "
    "+ x*(s^3 - 6*s^2*x_o + 3*s*x_o^2 + 2*x_o^3 - 9*s*x_o + 3*x_o^2 - 6*x_o + 1) - y^3 + y^2*(- 3*s - 2) "
    "+ y*(s^3 - x_o^3 + 3*s^2 - 3*s*x_o + 3*s - 3*x_o) + 3*s^2*x_o^2 - 3*s*x_o^3 + s^3 + 6*s*x_o^2 - 3*x_o^3 "
    "+ 3*s^2 + 3*x_o*s + 3*x_o^2 + 6*s + 3*x_o + 5";

// 4-torsion family in t; T = (t, t), [2]T = (0, 0), r = 1, s = 2.
constexpr const char* kF4 = "x*(x^2 - (2*t - 1)*x + t^2)";
constexpr const char* kB4 = "y - (x - t)*(x - 2) + t";
constexpr const char* kXi4 = "x^2 + (-(2*t - 1) + 1)*x + t^2 - 2*y";
constexpr const char* kB4d =
    "t^2*x^4 - 2*t*x^5 + x^6 + 2*t^2*x^3 - 8*t*x^4 + 4*t*x^3*y + 8*x^5 - 6*x^4*y - 5*t^2*x^2 + 26*t*x^3 "
    "- 8*t*x^2*y - 29*x^4 + 16*x^3*y + 2*t^2*x - 20*t*x^2 + 8*t*x*y + 32*x^3 - 18*x^2*y + t^2 + 2*t*x - 4*t*y "
    "- 11*x^2 + 12*x*y + 2*x - 2*y";
constexpr const char* kH4d =
    "x^2*y^2*(2*t + 6) + x^2*y*(- 10*t^2 + 44*t - 40) + x^2*(8*t^3 - 80*t^2 + 168*t - 79) - 6*x*y^3 "
    "+ x*y^2*(- t^2 + 6*t - 36) + x*y*(8*t^3 - 22*t^2 + 8*t + 12) + x*(- 7*t^4 + 52*t^3 - 66*t^2 + 2*t + 2) + y^4 "
    "+ y^3*(- 8*t + 22) + y^2*(7*t^2 - 52*t + 68) + y*(- 4*t - 2) + t^2";
constexpr const char* kQ4 = "x + y + 1";

// 6-torsion family in t.
constexpr const char* kF6 = "x^3 - (3/4*t^2 - 3*t + 2)*x^2 + 1/2*(-t^2 + 3*t - 2)*t*x + 1/4*(-t^2 + 3*t - 2)^2";
constexpr std::array<const char*, 2> kT6 = {"0", "1/2*(t - 1)*(t - 2)"};
constexpr std::array<const char*, 2> kT6x2 = {"t^2 - 3*t + 2", "1/2*(t - 2)*(t - 1)^2"};
constexpr std::array<const char*, 2> kT6x3 = {"-t + 1", "0"};
constexpr const char* kXi6 = "t^3 - 3*t^2*x + 2*x^3 - 5*t^2 + 8*t*x - 2*t*y + 4*x^2 + 4*x*y + 8*t - 4*x + 4*y - 4";
constexpr const char* kB6 = "y - (x - 0)*(x - 4) + 1/2*(t - 1)*(t - 2)";
constexpr const char* kB6d =
    "128*x^9 - 2432*x^8 - 512*x^7*y + 24864*x^7 + 8832*x^6*y - 173184*x^6 - 57024*x^5*y + 738248*x^5 "
    "+ 107168*x^4*y - 1310712*x^4 + 590592*x^3*y - 1918138*x^3 - 3714312*x^2*y + 11061932*x^2 + 7111844*x*y "
    "- 12378399*x - 3541074*y + 3545170";
constexpr const char* kH6d =
    "68872271/32 - 2528*x^2*y^4 - 512*x*y^5 + 128*y^6 - 64608*x^2*y^3 + 27256*x*y^4 + 9088*y^5 "
    "+ 1997169/2*y^2*x^2 + 177536*y^3*x - 201632*y^4 - 3294680*x^2*y - 21965953/8*y^2*x + 352704*y^3 "
    "+ 448707487/128*x^2 + 8047460*x*y + 51021297/32*y^2 - 194729737/32*x - 3902866*y";
constexpr const char* kQ6 = "x^3 + y^3 + 1";

// 8-torsion family in t.
constexpr const char* kF8 =
    "(x - t^4 + t^3)*(x^2 - (2*t^3 - 4*t^2 + 2*t - 1/4)*x - t^6 + 2*t^5 - 5/4*t^4 + 1/4*t^3)";
constexpr std::array<const char*, 2> kT8 = {"0", "-t^5 + 3/2*t^4 - 1/2*t^3"};
constexpr std::array<const char*, 2> kT8x2 = {"t^2*(2*t - 1)*(t - 1)", "2*(t - 1)^2*t^2*(t - 1/2)^2"};
constexpr std::array<const char*, 2> kT8x4 = {"t^3*(t - 1)", "0"};
constexpr const char* kXi8 =
    "4*t^12 - 8*t^11 + 5*t^10 + 16*t^9*x - t^9 - 32*t^8*x + 18*t^7*x + 4*t^7*y + 16*t^6*x^2 - 3*t^6*x "
    "- 2*t^6*y - 40*t^5*x^2 + 21*t^4*x^2 + 12*t^4*x*y - 3*t^3*x^2 - 4*t^3*x*y - 16*t^2*x^3 + 8*t*x^3 "
    "+ 8*t*x^2*y - 2*x^4 - x^3 - 2*x^2*y";
constexpr const char* kB8 = "y - (x - 0)*(x - 1) + (-t^5 + 3/2*t^4 - 1/2*t^3)";
constexpr const char* kB8d =
    "512*x^12 - 3840*x^11 - 1536*x^10*y + 53760*x^10 - 4096*x^9*y - 78848*x^9 + 226304*x^8*y - 4409664*x^8 "
    "- 2783232*x^7*y + 48818400*x^7 + 20539072*x^6*y - 283514336*x^6 - 97078784*x^5*y + 1066337424*x^5 "
    "+ 304250784*x^4*y - 2692293822*x^4 - 639609984*x^3*y + 4513159593*x^3 + 874149354*x^2*y - 4813270128*x^2 "
    "- 702018576*x*y + 2958279813*x + 250317702*y - 798728850";
constexpr const char* kH8d =
    "-986999682916161/512 - 16640*x^2*y^6 - 1536*x*y^7 + 512*y^8 - 153664*x^2*y^5 + 288768*x*y^6 + 24704*y^7 "
    "+ 54601398*x^2*y^4 - 2994208*x*y^5 - 4303600*y^6 - 974116559*x^2*y^3 - 272142150*x*y^4 + 69041954*y^5 "
    "- 157122991069/16*x^2*y^2 + 45769674189/8*x*y^3 + 11197406491/8*y^4 + 41898589232589/128*y*x^2 "
    "+ 755425355935/128*y^2*x - 1214565010245/32*y^3 - 3844005564383585/2048*x^2 - 26329075721469/32*x*y "
    "+ 103349774295737/512*y^2 + 2415502623658065/512*x + 10759562218989/32*y";
constexpr const char* kQ8 = "x^5 + y^5 + 1";

}  // namespace fixture

BiPoly poly(const char* text, const Bindings& b = {}) { return parse_bipoly(text, {"x", "y"}, b); }

Rational value(const char* text, const Bindings& b) { return parse_unipoly(text, "x", b).coeff(0); }

EllipticCurve curve(const char* f, const Bindings& b) { return EllipticCurve::from_poly(parse_unipoly(f, "x", b)); }

EPoint point(const EllipticCurve& e, const std::array<const char*, 2>& xy, const Bindings& b) {
  return EPoint::affine(e, value(xy[0], b), value(xy[1], b));
}

std::string binding_text(const Bindings& b) {
  std::string out;
  for (const auto& [k, v] : b) out += (out.empty() ? "" : " ") + k + "=" + to_string(v);
  return out;
}

void compare(Report& r, const std::string& name, const BiPoly& expected, const BiPoly& actual) {
  const auto diff = first_difference(expected, actual);
  r.add_check(name, !diff);
  if (diff) r.add("mismatch." + name, *diff);
}

// Runs the pipeline and records b_nd, h_nd, the verification checks and the
// comparison with the fixtures.
ContactResult pipeline(Report& r, const std::string& tag, const EllipticCurve& e, const EPoint& t, int n,
                       const BiPoly& b_d, const BiPoly& xi_expected) {
  compare(r, tag + "xi", xi_expected, build_xi(e, t, n).to_poly());
  ContactResult res = run_contact(FunctionRep::from_poly(b_d, e), t, n);
  Report verification = res.report;
  for (const auto& [k, v] : verification.entries())
    if (k.rfind("check.", 0) == 0) r.add(k.substr(0, 6) + tag + k.substr(6), v);
  return res;
}

void smoothness(Report& r, const std::string& name, const BiPoly& h, bool expect_smooth) {
  const auto verdict = is_smooth_projective(homogenize(h));
  r.add(name, verdict.smooth ? "smooth" : "singular (chart " + chart_name(verdict.witness->chart) + ")");
  r.add_check(name, verdict.smooth == expect_smooth);
}

void singular_at_x_axis_point(Report& r, const std::string& name, const BiPoly& h) {
  r.add_check(name, is_singular_at(homogenize(h), {Rational(1), Rational(0), Rational(0)}));
}

void torsion(Report& r, const std::string& name, const EPoint& p, int expected) {
  const auto k = order_of(p);
  r.add("order." + name, k ? std::to_string(*k) : "none");
  r.add_check("order." + name, k && *k == expected);
}

Report section_4_1() {
  Report r("reproduce 4.1 (2-torsion)");
  const std::vector<Bindings> specs{
      {{"a", 1}, {"b", 1}, {"c1", 0}, {"c2", -1}, {"x_o", 0}},
      {{"a", 2}, {"b", 3}, {"c1", 1}, {"c2", 2}, {"x_o", -1}},
      {{"a", Rational(1, 2)}, {"b", -2}, {"c1", -3}, {"c2", 7}, {"x_o", 2}},
      {{"a", -3}, {"b", Rational(1, 3)}, {"c1", 2}, {"c2", -5}, {"x_o", Rational(1, 3)}},
  };
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& b = specs[i];
    const std::string tag = "case" + std::to_string(i + 1) + ".";
    r.add(tag + "params", binding_text(b));
    const EllipticCurve e = curve(fixture::kF2, b);
    const EPoint t = EPoint::affine(e, b.at("x_o"), 0);
    torsion(r, tag + "T", t, 2);
    const auto res = pipeline(r, tag, e, t, 2, poly(fixture::kB2, b), poly(fixture::kXi2, b));
    r.add(tag + "h_nd", to_string(res.h_nd));
    compare(r, tag + "h_nd", poly(fixture::kH2, b), res.h_nd);
  }
  compare(r, "h_nd.literal", poly("y^2 + 2*x*y - x^2 - 2*y + 2*x - 1"),
          run_contact(FunctionRep::from_poly(poly(fixture::kB2, specs[0]), curve(fixture::kF2, specs[0])),
                      EPoint::affine(curve(fixture::kF2, specs[0]), 0, 0), 2)
              .h_nd);
  return r;
}

Report section_4_2() {
  Report r("reproduce 4.2 (3-torsion, m = n = r = 1)");
  r.add("convention", "T = (x_o, -(x_o + 1)), xi = y + x + 1");
  const std::vector<Bindings> specs{{{"x_o", 0}, {"s", 2}}, {{"x_o", 1}, {"s", 3}}, {{"x_o", Rational(-1, 2)}, {"s", 5}},
                                    {{"x_o", 2}, {"s", Rational(-1, 3)}}};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& b = specs[i];
    const std::string tag = "case" + std::to_string(i + 1) + ".";
    r.add(tag + "params", binding_text(b));
    const EllipticCurve e = curve(fixture::kF3, b);
    const EPoint t = EPoint::affine(e, b.at("x_o"), -(b.at("x_o") + 1));
    torsion(r, tag + "T", t, 3);
    compare(r, tag + "tangent_at_iota_T", poly("y - x - 1"), tangent_line(neg(t)));
    const auto res = pipeline(r, tag, e, t, 3, poly(fixture::kB3, b), poly(fixture::kXi3, b));
    compare(r, tag + "b_nd", poly(fixture::kB3d, b), res.b_nd.to_poly());
    compare(r, tag + "h_nd", poly(fixture::kH3d, b), res.h_nd);
    if (i == 0) {
      r.add(tag + "b_nd", to_string(res.b_nd.to_poly()));
      r.add(tag + "h_nd", to_string(res.h_nd));
    }
  }
  bool any_smooth = false;
  for (int s : {2, 3, 5}) {
    const Bindings b{{"x_o", 0}, {"s", s}};
    const EllipticCurve e = curve(fixture::kF3, b);
    const auto res = run_contact(FunctionRep::from_poly(poly(fixture::kB3, b), e), EPoint::affine(e, 0, -1), 3);
    const bool smooth = is_smooth_projective(homogenize(res.h_nd)).smooth;
    r.add("smooth.s=" + std::to_string(s), smooth ? "smooth" : "singular");
    any_smooth = any_smooth || smooth;
  }
  r.add_check("smooth_for_some_s", any_smooth);
  return r;
}

Report section_4_3() {
  Report r("reproduce 4.3 (4-torsion, r = 1, s = 2)");
  const std::vector<Rational> ts{3, 2, -1, Rational(1, 2)};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Bindings b{{"t", ts[i]}};
    const std::string tag = "t=" + to_string(ts[i]) + ".";
    const EllipticCurve e = curve(fixture::kF4, b);
    const EPoint t = EPoint::affine(e, ts[i], ts[i]);
    torsion(r, tag + "T", t, 4);
    torsion(r, tag + "2T", scalar_mul(2, t), 2);
    r.add_check(tag + "2T_is_origin", scalar_mul(2, t) == EPoint::affine(e, 0, 0));
    compare(r, tag + "tangent_at_T", poly("y - x"), tangent_line(t));
    const auto res = pipeline(r, tag, e, t, 4, poly(fixture::kB4, b), poly(fixture::kXi4, b));
    compare(r, tag + "b_nd", poly(fixture::kB4d, b), res.b_nd.to_poly());
    compare(r, tag + "h_nd", poly(fixture::kH4d, b), res.h_nd);
    if (i == 0) {
      r.add(tag + "b_nd", to_string(res.b_nd.to_poly()));
      r.add(tag + "h_nd", to_string(res.h_nd));
      smoothness(r, tag + "smooth.h_nd", res.h_nd, false);
      singular_at_x_axis_point(r, tag + "singular_at_[1,0,0]", res.h_nd);
      smoothness(r, tag + "smooth.h_tilde", smoothing_fix(res.h_nd, e, poly(fixture::kQ4)), true);
    }
  }
  return r;
}

Report section_4_4() {
  Report r("reproduce 4.4 (6-torsion, t = 3, r = 1, s = 4)");
  for (Rational tv : {Rational(3), Rational(5), Rational(-2), Rational(1, 3)}) {
    const Bindings b{{"t", tv}};
    const std::string tag = "t=" + to_string(tv) + ".";
    const EllipticCurve e = curve(fixture::kF6, b);
    const EPoint t = point(e, fixture::kT6, b);
    torsion(r, tag + "T", t, 6);
    r.add_check(tag + "2T_table", scalar_mul(2, t) == point(e, fixture::kT6x2, b));
    r.add_check(tag + "3T_table", scalar_mul(3, t) == point(e, fixture::kT6x3, b));
    torsion(r, tag + "2T", scalar_mul(2, t), 3);
    torsion(r, tag + "3T", scalar_mul(3, t), 2);
    compare(r, tag + "xi", poly(fixture::kXi6, b), build_xi(e, t, 6).to_poly());
  }
  const Bindings b{{"t", 3}};
  const EllipticCurve e = curve(fixture::kF6, b);
  const EPoint t = point(e, fixture::kT6, b);
  const auto res = pipeline(r, "", e, t, 6, poly(fixture::kB6, b), poly(fixture::kXi6, b));
  r.add("b_nd", to_string(res.b_nd.to_poly()));
  r.add("h_nd", to_string(res.h_nd));
  compare(r, "b_nd", poly(fixture::kB6d), res.b_nd.to_poly());
  compare(r, "h_nd", poly(fixture::kH6d), res.h_nd);
  smoothness(r, "smooth.h_nd", res.h_nd, false);
  singular_at_x_axis_point(r, "singular_at_[1,0,0]", res.h_nd);
  smoothness(r, "smooth.h_tilde", smoothing_fix(res.h_nd, e, poly(fixture::kQ6)), true);
  return r;
}

Report section_4_5() {
  Report r("reproduce 4.5 (8-torsion, t = -1, r = 1, s = 1)");
  for (Rational tv : {Rational(-1), Rational(2), Rational(3), Rational(-1, 3)}) {
    const Bindings b{{"t", tv}};
    const std::string tag = "t=" + to_string(tv) + ".";
    const EllipticCurve e = curve(fixture::kF8, b);
    const EPoint t = point(e, fixture::kT8, b);
    torsion(r, tag + "T", t, 8);
    r.add_check(tag + "2T_table", scalar_mul(2, t) == point(e, fixture::kT8x2, b));
    r.add_check(tag + "4T_table", scalar_mul(4, t) == point(e, fixture::kT8x4, b));
    torsion(r, tag + "2T", scalar_mul(2, t), 4);
    torsion(r, tag + "4T", scalar_mul(4, t), 2);
    compare(r, tag + "xi", poly(fixture::kXi8, b), build_xi(e, t, 8).to_poly());
  }
  const Bindings b{{"t", -1}};
  const EllipticCurve e = curve(fixture::kF8, b);
  const EPoint t = point(e, fixture::kT8, b);
  const auto res = pipeline(r, "", e, t, 8, poly(fixture::kB8, b), poly(fixture::kXi8, b));
  r.add("b_nd", to_string(res.b_nd.to_poly()));
  r.add("h_nd", to_string(res.h_nd));
  compare(r, "b_nd", poly(fixture::kB8d), res.b_nd.to_poly());
  compare(r, "h_nd", poly(fixture::kH8d), res.h_nd);
  smoothness(r, "smooth.h_nd", res.h_nd, false);
  singular_at_x_axis_point(r, "singular_at_[1,0,0]", res.h_nd);
  smoothness(r, "smooth.h_tilde", smoothing_fix(res.h_nd, e, poly(fixture::kQ8)), true);
  return r;
}

// Torsion orders of the contact configurations are read off the curves of
// the worked examples rather than typed in; order 1 is T = O (a flex line).
struct Config {
  std::string label;
  const char* f;
  Bindings b;
  std::array<const char*, 2> t;  // {"", ""} for O
};

Report zariski_section(const std::string& title, int n, const std::vector<Config>& configs,
                       const std::vector<int>& expected) {
  std::vector<std::pair<std::string, int>> entries;
  for (const auto& c : configs) {
    if (c.t[0][0] == '\0') {
      entries.emplace_back(c.label, 1);
      continue;
    }
    const EllipticCurve e = curve(c.f, c.b);
    const auto k = order_of(point(e, c.t, c.b));
    entries.emplace_back(c.label, k ? *k : 0);
  }
  const ZariskiReport z = zariski_verdict(n, entries);
  Report r(title);
  r.merge(z.to_report());
  std::vector<int> got;
  for (const auto& e : z.entries) got.push_back(e.splitting);
  r.add_check("splitting_numbers", got == expected);
  r.add_check("distinguished", z.distinguished);
  return r;
}

const std::array<const char*, 2> kAtO{"", ""};

Config line_config() { return {"E + D1 (flex line, T = O)", fixture::kF4, {{"t", 3}}, kAtO}; }
Config e2_config() { return {"E + D2 (E_2, T = (0, 0))", fixture::kF2, {{"c1", 0}, {"c2", -1}, {"x_o", 0}}, {"0", "0"}}; }
Config e4_config() { return {"E + D (E_4, T = (3, 3))", fixture::kF4, {{"t", 3}}, {"3", "3"}}; }

Report section_5_1() {
  auto e4 = e4_config();
  e4.label = "E + D3 (E_4, T = (3, 3))";
  return zariski_section("reproduce 5.1 (n = 4)", 4, {line_config(), e2_config(), e4}, {4, 2, 1});
}

Report section_5_2() {
  auto l = line_config();
  auto e4 = e4_config();
  e4.label = "E + D3 (E_3, T = (0, 1))";
  e4.f = fixture::kF3;
  e4.b = {{"x_o", 0}};
  e4.t = {"0", "1"};
  const Config e6{"E + D4 (E_6, T = (0, 1))", fixture::kF6, {{"t", 3}}, fixture::kT6};
  return zariski_section("reproduce 5.2 (n = 6)", 6, {l, e2_config(), e4, e6}, {6, 3, 2, 1});
}

Report section_5_3() {
  auto e4 = e4_config();
  e4.label = "E + D3 (E_4, T = (3, 3))";
  const Config e8{"E + D4 (E_8, T = (0, 3))", fixture::kF8, {{"t", -1}}, fixture::kT8};
  return zariski_section("reproduce 5.3 (n = 8)", 8, {line_config(), e2_config(), e4, e8}, {8, 4, 2, 1});
}

}  // namespace

const std::vector<std::string>& reproducible_sections() {
  static const std::vector<std::string> ids{"4.1", "4.2", "4.3", "4.4", "4.5", "5.1", "5.2", "5.3"};
  return ids;
}

Report reproduce(const std::string& section) {
  if (section == "4.1") return section_4_1();
  if (section == "4.2") return section_4_2();
  if (section == "4.3") return section_4_3();
  if (section == "4.4") return section_4_4();
  if (section == "4.5") return section_4_5();
  if (section == "5.1") return section_5_1();
  if (section == "5.2") return section_5_2();
  if (section == "5.3") return section_5_3();
  throw UnknownSection("unknown section '" + section + "'");
}

std::optional<std::string> first_difference(const BiPoly& expected, const BiPoly& actual) {
  const BiPoly e = canonical_scalar(expected), a = canonical_scalar(actual);
  if (e == a) return std::nullopt;
  std::set<Exponents<2>, CanonicalTermOrder<2>> monomials;
  for (const auto& [m, c] : e.terms()) monomials.insert(m);
  for (const auto& [m, c] : a.terms()) monomials.insert(m);
  for (const auto& m : monomials) {
    const Rational ce = e.coeff(m), ca = a.coeff(m);
    if (ce != ca) {
      const std::string mono = to_string(BiPoly::term(1, m));
      return "coefficient of " + mono + " (canonical scale): expected " + to_string(ce) + ", got " + to_string(ca);
    }
  }
  return std::string("forms differ");
}

}  // namespace ncontact
