#include "ncontact/analysis.hpp"

#include <future>
#include <set>
#include <sstream>

#include "ncontact/contact.hpp"
#include "ncontact/error.hpp"
#include "ncontact/groebner.hpp"

namespace ncontact {

namespace {

constexpr MonomialOrder kSingularLocusOrder = MonomialOrder::GradedXoverY;

std::vector<BiPoly> singular_locus_basis(const TernaryForm& form, Chart chart) {
  const auto coords = chart_coordinates(chart);
  std::vector<BiPoly> gens{dehomogenize(form, chart), dehomogenize(form.partial(coords[0]), chart),
                           dehomogenize(form.partial(coords[1]), chart)};
  return buchberger(gens, kSingularLocusOrder);
}

}  // namespace

SmoothnessVerdict is_smooth_projective(const TernaryForm& form) {
  if (form.is_zero()) throw InvalidArgument("the zero form does not define a curve");
  if (!form.is_homogeneous()) throw NotHomogeneous("form is not homogeneous: " + to_string(form));
  const std::array<Chart, 3> charts{Chart::Z, Chart::Y, Chart::X};
  std::array<std::future<std::vector<BiPoly>>, 3> jobs;
  for (std::size_t i = 0; i < charts.size(); ++i)
    jobs[i] = std::async(std::launch::async, singular_locus_basis, std::cref(form), charts[i]);
  SmoothnessVerdict verdict{true, std::nullopt};
  for (std::size_t i = 0; i < charts.size(); ++i) {
    auto basis = jobs[i].get();
    if (!is_unit_ideal(basis) && verdict.smooth) {
      verdict.smooth = false;
      verdict.witness = SmoothnessWitness{charts[i], std::move(basis)};
    }
  }
  return verdict;
}

bool witness_contains(const SmoothnessWitness& w, const Rational& u, const Rational& v) {
  for (const auto& g : w.basis)
    if (sgn(g.evaluate({u, v})) != 0) return false;
  return true;
}

bool is_singular_at(const TernaryForm& form, const std::array<Rational, 3>& point) {
  if (sgn(form.evaluate(point)) != 0) return false;
  for (std::size_t v = 0; v < 3; ++v)
    if (sgn(form.partial(v).evaluate(point)) != 0) return false;
  return true;
}

std::optional<SmoothingChoice> auto_smoothing_fix(const BiPoly& h, const EllipticCurve& curve) {
  const int deg = h.total_degree();
  std::vector<BiPoly> candidates{BiPoly{}, BiPoly::constant(1)};
  const BiPoly x = bx(), y = by(), one = BiPoly::constant(1);
  candidates.push_back(x + y + one);
  candidates.push_back(pow(x, 3) + pow(y, 3) + one);
  candidates.push_back(pow(x, 5) + pow(y, 5) + one);
  for (int total = 1; total <= 3; ++total)
    for (int i = total; i >= 0; --i) candidates.push_back(BiPoly::term(1, {i, total - i}));
  for (const auto& q : candidates) {
    if (q.total_degree() > deg - 3) continue;
    BiPoly fixed = smoothing_fix(h, curve, q);
    if (is_smooth_projective(homogenize(fixed, deg)).smooth) return SmoothingChoice{q, std::move(fixed)};
  }
  return std::nullopt;
}

int splitting_number(int n, int torsion_order) {
  if (n < 1 || torsion_order < 1) throw InvalidArgument("splitting_number needs positive arguments");
  if (n % torsion_order != 0)
    throw NotDivisible("torsion order " + std::to_string(torsion_order) + " does not divide " + std::to_string(n),
                       std::to_string(n % torsion_order));
  return n / torsion_order;
}

TernaryForm pencil_member(const Rational& lambda, const Rational& mu, const TernaryForm& a, const TernaryForm& b) {
  if (sgn(lambda) == 0 && sgn(mu) == 0) throw ZeroParameters("pencil parameters (0, 0)");
  if (!a.is_homogeneous() || !b.is_homogeneous()) throw NotHomogeneous("pencil members must be forms");
  if (a.total_degree() != b.total_degree())
    throw DegreeMismatch("pencil forms have degrees " + std::to_string(a.total_degree()) + " and " +
                         std::to_string(b.total_degree()));
  return lambda * a + mu * b;
}

std::string ZariskiReport::tuple_name() const {
  static const char* names[] = {"", "single", "pair", "triple", "quartet", "quintet", "sextet"};
  const std::size_t k = entries.size();
  return k < 7 ? names[k] : std::to_string(k) + "-tuple";
}

std::string ZariskiReport::render_table() const {
  std::size_t w = 5;
  for (const auto& e : entries) w = std::max(w, e.label.size());
  std::ostringstream os;
  os << "n = " << n << "\n";
  os << "label" << std::string(w - 5, ' ') << " | order | splitting\n";
  os << std::string(w, '-') << "-+-------+----------\n";
  for (const auto& e : entries) {
    const std::string o = std::to_string(e.torsion_order), s = std::to_string(e.splitting);
    os << e.label << std::string(w - e.label.size(), ' ') << " | " << std::string(5 - std::min<std::size_t>(5, o.size()), ' ')
       << o << " | " << std::string(9 - std::min<std::size_t>(9, s.size()), ' ') << s << "\n";
  }
  os << (distinguished ? "verdict: Zariski " + tuple_name() + " (splitting numbers pairwise distinct)"
                       : "verdict: not distinguished (repeated splitting numbers)")
     << "\n";
  return os.str();
}

Report ZariskiReport::to_report() const {
  Report r("zariski n=" + std::to_string(n));
  r.add("n", std::to_string(n));
  std::string splits;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    r.add("entry." + std::to_string(i + 1), e.label + " order=" + std::to_string(e.torsion_order) +
                                                " splitting=" + std::to_string(e.splitting));
    splits += (i ? "," : "") + std::to_string(e.splitting);
  }
  r.add("splitting_numbers", splits);
  r.add("verdict", distinguished ? "Zariski " + tuple_name() : "not distinguished");
  r.set_attachment(render_table());
  return r;
}

ZariskiReport zariski_verdict(int n, const std::vector<std::pair<std::string, int>>& configs) {
  ZariskiReport rep;
  rep.n = n;
  std::set<int> seen;
  bool distinct = true;
  for (const auto& [label, order] : configs) {
    const int s = splitting_number(n, order);
    distinct = seen.insert(s).second && distinct;
    rep.entries.push_back({label, order, s});
  }
  rep.distinguished = distinct && rep.entries.size() >= 2;
  return rep;
}

}  // namespace ncontact
