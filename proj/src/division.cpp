#include "ncontact/division.hpp"

#include <map>

#include "ncontact/error.hpp"

namespace ncontact {

bool monomial_greater(MonomialOrder order, const Exponents<2>& a, const Exponents<2>& b) {
  switch (order) {
    case MonomialOrder::LexYoverX:
      return a[1] != b[1] ? a[1] > b[1] : a[0] > b[0];
    case MonomialOrder::LexXoverY:
      return a[0] != b[0] ? a[0] > b[0] : a[1] > b[1];
    case MonomialOrder::GradedXoverY: {
      const int da = a[0] + a[1], db = b[0] + b[1];
      return da != db ? da > db : a[0] > b[0];
    }
  }
  return false;
}

Exponents<2> leading_monomial(const BiPoly& p, MonomialOrder order) {
  if (p.is_zero()) throw InvalidArgument("leading monomial of zero");
  const Exponents<2>* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (best == nullptr || monomial_greater(order, e, *best)) best = &e;
  return *best;
}

namespace {

struct OrderDesc {
  MonomialOrder order;
  bool operator()(const Exponents<2>& a, const Exponents<2>& b) const { return monomial_greater(order, a, b); }
};

using OrderedTerms = std::map<Exponents<2>, Rational, OrderDesc>;

void add_into(OrderedTerms& t, const Exponents<2>& e, const Rational& c) {
  auto [it, inserted] = t.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

}  // namespace

DivisionResult divmod_multi(const BiPoly& g, const std::vector<BiPoly>& divisors, MonomialOrder order) {
  if (divisors.empty()) throw InvalidArgument("divmod_multi needs at least one divisor");
  std::vector<Exponents<2>> lead;
  std::vector<Rational> lead_coeff;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw InvalidArgument("divmod_multi: zero divisor");
    lead.push_back(leading_monomial(d, order));
    lead_coeff.push_back(d.coeff(lead.back()));
  }
  OrderedTerms p(OrderDesc{order});
  for (const auto& [e, c] : g.terms()) p.emplace(e, c);

  DivisionResult out;
  out.quotients.resize(divisors.size());
  while (!p.empty()) {
    const auto lt = *p.begin();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (lt.first[0] < lead[i][0] || lt.first[1] < lead[i][1]) continue;
      const Exponents<2> shift{lt.first[0] - lead[i][0], lt.first[1] - lead[i][1]};
      const Rational factor = lt.second / lead_coeff[i];
      out.quotients[i].add_term(shift, factor);
      for (const auto& [e, c] : divisors[i].terms())
        add_into(p, Exponents<2>{e[0] + shift[0], e[1] + shift[1]}, -factor * c);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(lt.first, lt.second);
      p.erase(p.begin());
    }
  }
  return out;
}

void require_curve_poly(const UniPoly& f) {
  if (f.degree() < 3 || f.degree() % 2 == 0 || f.leading() != 1)
    throw InvalidCurvePoly("curve polynomial must be monic of odd degree >= 3, got " + f.to_string());
}

BiPoly curve_relation(const UniPoly& f) { return by() * by() - BiPoly::from_uni(f); }

BiPoly nf1(const BiPoly& g, const UniPoly& f) {
  require_curve_poly(f);
  // y^j = f^(j/2) * y^(j mod 2) on the curve.
  std::vector<UniPoly> fpow{UniPoly::constant(1)};
  BiPoly out;
  for (const auto& [e, c] : g.terms()) {
    const auto k = static_cast<std::size_t>(e[1] / 2);
    while (fpow.size() <= k) fpow.push_back(fpow.back() * f);
    const UniPoly part = fpow[k] * UniPoly::monomial(c, e[0]);
    for (int i = 0; i <= part.degree(); ++i) out.add_term({i, e[1] % 2}, part.coeff(i));
  }
  return out;
}

BiPoly nf2(const BiPoly& g, const UniPoly& f) {
  require_curve_poly(f);
  const int m = f.degree();
  // Bucket k holds the coefficient of x^k as a polynomial in y.
  std::map<int, UniPoly> buckets = g.coefficients_in(0);
  const UniPoly y2 = UniPoly::monomial(1, 2);
  while (!buckets.empty() && buckets.rbegin()->first >= m) {
    auto top = std::prev(buckets.end());
    const int k = top->first;
    const UniPoly c = std::move(top->second);
    buckets.erase(top);
    // x^m = y^2 - sum_{i<m} f_i x^i
    buckets[k - m] += c * y2;
    for (int i = 0; i < m; ++i) {
      const Rational& fi = f.coeff(i);
      if (sgn(fi) != 0) buckets[k - m + i] -= c * fi;
    }
  }
  BiPoly out;
  for (const auto& [k, c] : buckets)
    for (int j = 0; j <= c.degree(); ++j) out.add_term({k, j}, c.coeff(j));
  return out;
}

BiPoly exact_divide(const BiPoly& g, const BiPoly& h) {
  if (h.is_zero()) throw InvalidArgument("exact_divide by zero");
  auto res = divmod_multi(g, {h}, MonomialOrder::LexYoverX);
  if (!res.remainder.is_zero())
    throw NotDivisible("polynomial " + to_string(h) + " does not divide the dividend", to_string(res.remainder));
  return std::move(res.quotients.front());
}

}  // namespace ncontact
