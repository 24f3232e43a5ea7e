#include "ncontact/session.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "ncontact/analysis.hpp"
#include "ncontact/contact.hpp"
#include "ncontact/division.hpp"
#include "ncontact/error.hpp"
#include "ncontact/parse.hpp"
#include "ncontact/projective.hpp"
#include "ncontact/reproduce.hpp"

namespace ncontact {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

enum class Kind { Curve, Point, Divisor, Poly, Form };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Curve:
      return "curve";
    case Kind::Point:
      return "point";
    case Kind::Divisor:
      return "divisor";
    case Kind::Poly:
      return "poly";
    case Kind::Form:
      return "form";
  }
  return "?";
}

class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : text_(text) {}

  Session parse() {
    std::size_t offset = 0;
    int line_no = 0;
    while (offset <= text_.size()) {
      std::size_t end = text_.find('\n', offset);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      line_ = line_no;
      line_offset_ = offset;
      std::string_view raw = text_.substr(offset, end - offset);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const std::string line = trim(raw);
      if (!line.empty()) statement(line);
      offset = end + 1;
    }
    return std::move(session_);
  }

 private:
  [[noreturn]] void syntax(const std::string& what) const {
    throw SyntaxError("line " + std::to_string(line_) + ": " + what, line_offset_);
  }

  void declare(const std::string& name, Kind kind) {
    if (!is_identifier(name)) syntax("invalid name '" + name + "'");
    if (names_.count(name)) syntax("name '" + name + "' is already declared");
    names_[name] = kind;
  }

  void require(const std::string& name, Kind kind) const {
    auto it = names_.find(name);
    if (it == names_.end() || it->second != kind)
      throw UnknownName("line " + std::to_string(line_) + ": no " + kind_name(kind) + " named '" + name + "'");
  }

  const EllipticCurve& curve_named(const std::string& name) const {
    require(name, Kind::Curve);
    return curves_.at(name);
  }

  Rational rational(const std::string& text) {
    try {
      const auto p = parse_poly<1>(trim(text), {});
      if (p.total_degree() > 0) syntax("expected a rational number, got '" + text + "'");
      return p.coeff({0});
    } catch (const SyntaxError& e) {
      syntax(std::string("bad number: ") + e.what());
    } catch (const UnknownVariable& e) {
      syntax(std::string("bad number: ") + e.what());
    }
  }

  int positive_int(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos) syntax("expected a positive integer, got '" + t + "'");
    const int v = std::stoi(t);
    if (v < 1) syntax("expected a positive integer, got '" + t + "'");
    return v;
  }

  // "(a, b)" -> {a, b}
  std::pair<Rational, Rational> pair_literal(const std::string& text) {
    const std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') syntax("expected '(x, y)', got '" + t + "'");
    const std::string inner = t.substr(1, t.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) syntax("expected '(x, y)', got '" + t + "'");
    return {rational(inner.substr(0, comma)), rational(inner.substr(comma + 1))};
  }

  // "NAME on CURVE = rhs"
  std::tuple<std::string, std::string, std::string> on_clause(const std::string& rest) {
    const auto eq = rest.find('=');
    if (eq == std::string::npos) syntax("expected '='");
    const auto w = words(rest.substr(0, eq));
    if (w.size() != 3 || w[1] != "on") syntax("expected 'NAME on CURVE ='");
    return {w[0], w[2], trim(rest.substr(eq + 1))};
  }

  void statement(const std::string& line) {
    const auto sp = line.find_first_of(" \t");
    const std::string head = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (head == "curve")
      curve_decl(rest);
    else if (head == "point")
      point_decl(rest);
    else if (head == "divisor")
      divisor_decl(rest);
    else if (head == "poly" || head == "form")
      poly_decl(head, rest);
    else
      command(head, words(rest));
  }

  void curve_decl(const std::string& rest) {
    const auto colon = rest.find(':');
    if (colon == std::string::npos) syntax("expected 'curve NAME: y^2 = f(x)'");
    const std::string name = trim(rest.substr(0, colon));
    const std::string eqn = rest.substr(colon + 1);
    const auto eq = eqn.find('=');
    if (eq == std::string::npos) syntax("expected 'y^2 = f(x)'");
    std::string lhs = trim(eqn.substr(0, eq));
    std::erase_if(lhs, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (lhs != "y^2") syntax("curve equations must read 'y^2 = f(x)'");
    declare(name, Kind::Curve);
    UniPoly f;
    try {
      f = parse_unipoly(eqn.substr(eq + 1), "x");
    } catch (const SyntaxError& e) {
      syntax(e.what());
    }
    EllipticCurve c = EllipticCurve::from_poly(f);
    curves_.emplace(name, c);
    session_.declarations.emplace_back(CurveDecl{name, std::move(c)});
  }

  void point_decl(const std::string& rest) {
    auto [name, curve, rhs] = on_clause(rest);
    const EllipticCurve& c = curve_named(curve);
    declare(name, Kind::Point);
    EPoint p = rhs == "O" ? EPoint::infinity(c) : [&] {
      auto [x, y] = pair_literal(rhs);
      return EPoint::affine(c, x, y);
    }();
    session_.declarations.emplace_back(PointDecl{name, curve, std::move(p)});
  }

  void divisor_decl(const std::string& rest) {
    auto [name, curve, rhs] = on_clause(rest);
    const EllipticCurve& c = curve_named(curve);
    declare(name, Kind::Divisor);
    if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}') syntax("expected '{ (x, y): m, ... }'");
    const std::string body = trim(std::string_view(rhs).substr(1, rhs.size() - 2));
    EffectiveDivisor d(c);
    std::size_t pos = 0;
    while (pos < body.size()) {
      const auto close = body.find(')', pos);
      if (close == std::string::npos) syntax("unterminated point in divisor");
      auto [x, y] = pair_literal(body.substr(pos, close + 1 - pos));
      std::size_t colon = body.find(':', close);
      if (colon == std::string::npos) syntax("expected ': m' after point");
      std::size_t comma = body.find(',', colon);
      const std::size_t stop = comma == std::string::npos ? body.size() : comma;
      const int m = positive_int(body.substr(colon + 1, stop - colon - 1));
      d.add(EPoint::affine(c, x, y), m);
      pos = stop == body.size() ? stop : stop + 1;
      while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    }
    session_.declarations.emplace_back(DivisorDecl{name, curve, std::move(d)});
  }

  void poly_decl(const std::string& head, const std::string& rest) {
    const auto eq = rest.find('=');
    if (eq == std::string::npos) syntax("expected '" + head + " NAME = expr'");
    const std::string name = trim(rest.substr(0, eq));
    const std::string expr = rest.substr(eq + 1);
    try {
      if (head == "poly") {
        declare(name, Kind::Poly);
        session_.declarations.emplace_back(PolyDecl{name, parse_bipoly(expr)});
      } else {
        declare(name, Kind::Form);
        session_.declarations.emplace_back(FormDecl{name, parse_ternary(expr)});
      }
    } catch (const SyntaxError& e) {
      syntax(e.what());
    }
  }

  void command(const std::string& verb, const std::vector<std::string>& a) {
    Command c{verb, {}};
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (a.size() < lo || a.size() > hi) syntax("wrong number of arguments to '" + verb + "'");
    };
    if (verb == "torsion") {
      if (a.size() != 1 && !(a.size() == 3 && a[1] == "bound")) syntax("usage: torsion P [bound k]");
      require(a[0], Kind::Point);
      c.args = {a[0], std::to_string(a.size() == 3 ? positive_int(a[2]) : 24)};
    } else if (verb == "xi") {
      arity(2, 2);
      require(a[0], Kind::Point);
      c.args = {a[0], std::to_string(positive_int(a[1]))};
    } else if (verb == "contact") {
      if (a.size() != 3 && !(a.size() == 5 && a[3] == "smooth-fix")) syntax("usage: contact b P n [smooth-fix auto|q]");
      require(a[0], Kind::Poly);
      require(a[1], Kind::Point);
      c.args = {a[0], a[1], std::to_string(positive_int(a[2]))};
      if (a.size() == 5) {
        if (a[4] != "auto") require(a[4], Kind::Poly);
        c.args.push_back(a[4]);
      }
    } else if (verb == "construct") {
      arity(1, 1);
      require(a[0], Kind::Divisor);
      c.args = a;
    } else if (verb == "smooth") {
      arity(1, 1);
      auto it = names_.find(a[0]);
      if (it == names_.end() || (it->second != Kind::Form && it->second != Kind::Poly))
        throw UnknownName("line " + std::to_string(line_) + ": no form or poly named '" + a[0] + "'");
      c.args = a;
    } else if (verb == "zariski") {
      arity(2, 2);
      c.args = {std::to_string(positive_int(a[0]))};
      std::istringstream is(a[1]);
      for (std::string d; std::getline(is, d, ',');) c.args.push_back(std::to_string(positive_int(d)));
    } else if (verb == "reproduce") {
      arity(1, 1);
      c.args = a;
    } else {
      syntax("unknown statement '" + verb + "'");
    }
    session_.commands.push_back(std::move(c));
  }

  std::string_view text_;
  int line_ = 0;
  std::size_t line_offset_ = 0;
  Session session_;
  std::map<std::string, Kind> names_;
  std::map<std::string, EllipticCurve> curves_;
};

std::string render_command(const Command& c) {
  std::string out = c.verb;
  if (c.verb == "torsion") return out + " " + c.args[0] + " bound " + c.args[1];
  if (c.verb == "contact") {
    out += " " + c.args[0] + " " + c.args[1] + " " + c.args[2];
    if (c.args.size() == 4) out += " smooth-fix " + c.args[3];
    return out;
  }
  if (c.verb == "zariski") {
    out += " " + c.args[0] + " ";
    for (std::size_t i = 1; i < c.args.size(); ++i) out += (i > 1 ? "," : "") + c.args[i];
    return out;
  }
  for (const auto& a : c.args) out += " " + a;
  return out;
}

struct Scope {
  std::map<std::string, EllipticCurve> curves;
  std::map<std::string, EPoint> points;
  std::map<std::string, EffectiveDivisor> divisors;
  std::map<std::string, BiPoly> polys;
  std::map<std::string, TernaryForm> forms;
};

Scope scope_of(const Session& s) {
  Scope sc;
  for (const auto& d : s.declarations) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, CurveDecl>) sc.curves.emplace(v.name, v.curve);
          if constexpr (std::is_same_v<T, PointDecl>) sc.points.emplace(v.name, v.point);
          if constexpr (std::is_same_v<T, DivisorDecl>) sc.divisors.emplace(v.name, v.divisor);
          if constexpr (std::is_same_v<T, PolyDecl>) sc.polys.emplace(v.name, v.poly);
          if constexpr (std::is_same_v<T, FormDecl>) sc.forms.emplace(v.name, v.form);
        },
        d);
  }
  return sc;
}

Report run_torsion(const Scope& sc, const Command& c) {
  const EPoint& p = sc.points.at(c.args[0]);
  Report r("torsion " + c.args[0]);
  r.add("point", p.to_string());
  const auto k = order_of(p, std::stoi(c.args[1]));
  r.add("order", k ? std::to_string(*k) : "not torsion within bound " + c.args[1]);
  return r;
}

Report run_xi(const Scope& sc, const Command& c) {
  const EPoint& t = sc.points.at(c.args[0]);
  const int n = std::stoi(c.args[1]);
  const FunctionRep xi = build_xi(t.curve(), t, n);
  Report r("xi " + c.args[0] + " n=" + c.args[1]);
  r.add("T", t.to_string());
  r.add("xi", to_string(xi.to_poly()));
  const UniPoly nm = norm(xi);
  r.add("norm", nm.to_string());
  const UniPoly lin({-t.x(), Rational(1)});
  r.add_check("norm_identity", nm == pow(lin, static_cast<unsigned>(n)) * nm.leading());
  r.add_check("vanishes_at_T", sgn(xi(t)) == 0);
  if (n >= 3) r.add_check("nonzero_at_iota_T", sgn(xi(neg(t))) != 0);
  return r;
}

Report run_contact_command(const Scope& sc, const Command& c) {
  const EPoint& t = sc.points.at(c.args[1]);
  const int n = std::stoi(c.args[2]);
  const FunctionRep b_d = FunctionRep::from_poly(sc.polys.at(c.args[0]), t.curve());
  ContactResult res = run_contact(b_d, t, n);
  Report r = res.report;
  if (c.args.size() == 4) {
    std::optional<SmoothingChoice> choice;
    if (c.args[3] == "auto") {
      choice = auto_smoothing_fix(res.h_nd, t.curve());
    } else {
      const BiPoly& q = sc.polys.at(c.args[3]);
      choice = SmoothingChoice{q, smoothing_fix(res.h_nd, t.curve(), q)};
    }
    if (choice) {
      r.add("smoothing_q", to_string(choice->q));
      r.add("h_tilde", to_string(choice->h_smooth));
      const int deg = res.h_nd.total_degree();
      r.add_check("h_tilde_degree", choice->h_smooth.total_degree() == deg);
      r.add_check("h_tilde_same_restriction",
                  nf1(choice->h_smooth, t.curve().f()) == nf1(res.h_nd, t.curve().f()));
      r.add_check("h_tilde_smooth", is_smooth_projective(homogenize(choice->h_smooth, deg)).smooth);
    } else {
      r.add("smoothing_q", "none found");
      r.add_check("h_tilde_smooth", false);
    }
  } else {
    const auto v = is_smooth_projective(homogenize(res.h_nd));
    r.add("smooth.h_nd", v.smooth ? "smooth" : "singular (chart " + chart_name(v.witness->chart) + ")");
  }
  return r;
}

Report run_construct(const Scope& sc, const Command& c) {
  const EffectiveDivisor& d = sc.divisors.at(c.args[0]);
  const FunctionRep b = construct_b(d);
  Report r("construct " + c.args[0]);
  r.add("divisor", d.to_string());
  r.add("b", to_string(b.to_poly()));
  r.add("P_o", b.p_o ? b.p_o->to_string() : "none");
  r.merge(verify_prop14(d, b));
  return r;
}

Report run_smooth(const Scope& sc, const Command& c) {
  TernaryForm form;
  if (auto it = sc.forms.find(c.args[0]); it != sc.forms.end())
    form = it->second;
  else
    form = homogenize(sc.polys.at(c.args[0]));
  const auto v = is_smooth_projective(form);
  Report r("smooth " + c.args[0]);
  r.add("form", to_string(form));
  r.add("verdict", v.smooth ? "smooth" : "singular");
  if (v.witness) {
    r.add("witness.chart", chart_name(v.witness->chart));
    const auto names = chart_variable_names(v.witness->chart);
    std::string basis;
    for (const auto& g : v.witness->basis) basis += (basis.empty() ? "" : ", ") + g.to_string({names[0], names[1]});
    r.add("witness.basis", "{" + basis + "}");
  }
  r.add_check("smooth", v.smooth);
  return r;
}

Report run_zariski(const Command& c) {
  std::vector<std::pair<std::string, int>> configs;
  for (std::size_t i = 1; i < c.args.size(); ++i) configs.emplace_back("D" + std::to_string(i), std::stoi(c.args[i]));
  const ZariskiReport z = zariski_verdict(std::stoi(c.args[0]), configs);
  Report r = z.to_report();
  r.add_check("distinguished", z.distinguished);
  return r;
}

Report run_command(const Scope& sc, const Command& c) {
  if (c.verb == "torsion") return run_torsion(sc, c);
  if (c.verb == "xi") return run_xi(sc, c);
  if (c.verb == "contact") return run_contact_command(sc, c);
  if (c.verb == "construct") return run_construct(sc, c);
  if (c.verb == "smooth") return run_smooth(sc, c);
  if (c.verb == "zariski") return run_zariski(c);
  return reproduce(c.args.at(0));
}

}  // namespace

Session parse_session(std::string_view text) { return SessionParser(text).parse(); }

std::string render(const Session& s) {
  std::ostringstream os;
  for (const auto& d : s.declarations) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, CurveDecl>) os << "curve " << v.name << ": " << v.curve.to_string();
          if constexpr (std::is_same_v<T, PointDecl>) os << "point " << v.name << " on " << v.curve << " = " << v.point.to_string();
          if constexpr (std::is_same_v<T, DivisorDecl>)
            os << "divisor " << v.name << " on " << v.curve << " = " << v.divisor.to_string();
          if constexpr (std::is_same_v<T, PolyDecl>) os << "poly " << v.name << " = " << to_string(v.poly);
          if constexpr (std::is_same_v<T, FormDecl>) os << "form " << v.name << " = " << to_string(v.form);
        },
        d);
    os << "\n";
  }
  for (const auto& c : s.commands) os << render_command(c) << "\n";
  return os.str();
}

ExecutionResult execute(const Session& s) {
  const Scope sc = scope_of(s);
  ExecutionResult out;
  for (const auto& c : s.commands) {
    try {
      out.reports.push_back(run_command(sc, c));
    } catch (const Error& e) {
      throw Error(render_command(c) + ": " + e.what());
    }
    if (!out.reports.back().passed()) out.exit_code = 1;
  }
  return out;
}

}  // namespace ncontact
