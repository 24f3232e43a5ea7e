#include "ncontact/groebner.hpp"

#include <algorithm>
#include <map>

#include "ncontact/error.hpp"

namespace ncontact {

namespace {

using Mono = Exponents<2>;

void gcd(Integer& r, const Integer& a, const Integer& b) { mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
void lcm(Integer& r, const Integer& a, const Integer& b) { mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
void divexact(Integer& r, const Integer& a, const Integer& b) {
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

bool divides(const Mono& a, const Mono& b) { return a[0] <= b[0] && a[1] <= b[1]; }
Mono lcm_of(const Mono& a, const Mono& b) { return {std::max(a[0], b[0]), std::max(a[1], b[1])}; }
Mono minus(const Mono& a, const Mono& b) { return {a[0] - b[0], a[1] - b[1]}; }
bool coprime(const Mono& a, const Mono& b) { return std::min(a[0], b[0]) == 0 && std::min(a[1], b[1]) == 0; }

struct Desc {
  MonomialOrder order;
  bool operator()(const Mono& a, const Mono& b) const { return monomial_greater(order, a, b); }
};

// Integer-coefficient polynomial kept primitive; terms sorted by the order,
// largest first.
struct IPoly {
  std::vector<std::pair<Mono, Integer>> terms;
  const Mono& lm() const { return terms.front().first; }
  const Integer& lc() const { return terms.front().second; }
  bool is_zero() const { return terms.empty(); }
};

void make_primitive(IPoly& p) {
  if (p.terms.empty()) return;
  Integer g = 0;
  for (const auto& [m, c] : p.terms) {
    gcd(g, g, c);
    if (g == 1) break;
  }
  if (sgn(p.lc()) < 0) g = -g;
  if (g != 1)
    for (auto& [m, c] : p.terms) divexact(c, c, g);
}

IPoly to_ipoly(const BiPoly& p, MonomialOrder order) {
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) lcm(den, den, c.get_den());
  IPoly out;
  for (const auto& [e, c] : p.terms()) out.terms.emplace_back(e, Integer(c.get_num() * (den / c.get_den())));
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const auto& a, const auto& b) { return monomial_greater(order, a.first, b.first); });
  make_primitive(out);
  return out;
}

BiPoly to_bipoly(const IPoly& p, bool monic) {
  BiPoly out;
  for (const auto& [m, c] : p.terms) out.add_term(m, monic ? make_rational(c, p.lc()) : Rational(c));
  return out;
}

using TermMap = std::map<Mono, Integer, Desc>;

void axpy(TermMap& acc, const Integer& k, const Mono& shift, const IPoly& g) {
  for (const auto& [m, c] : g.terms) {
    Mono e{m[0] + shift[0], m[1] + shift[1]};
    auto [it, inserted] = acc.emplace(e, 0);
    it->second += k * c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

// Fraction-free full reduction of p by the polynomials indexed in `active`.
IPoly reduce_full(IPoly p, const std::vector<IPoly>& polys, const std::vector<std::size_t>& active,
                  MonomialOrder order) {
  TermMap work(Desc{order});
  for (auto& [m, c] : p.terms) work.emplace(m, std::move(c));
  std::vector<std::pair<Mono, Integer>> rem;
  int steps = 0;
  while (!work.empty()) {
    auto top = work.begin();
    const IPoly* red = nullptr;
    for (std::size_t idx : active)
      if (divides(polys[idx].lm(), top->first)) {
        red = &polys[idx];
        break;
      }
    if (red == nullptr) {
      rem.emplace_back(top->first, std::move(top->second));
      work.erase(top);
      continue;
    }
    Integer g;
    gcd(g, red->lc(), top->second);
    Integer mul_p = red->lc() / g;
    Integer mul_g = -(top->second / g);
    const Mono shift = minus(top->first, red->lm());
    if (mul_p != 1) {
      for (auto& kv : work) kv.second *= mul_p;
      for (auto& kv : rem) kv.second *= mul_p;
    }
    axpy(work, mul_g, shift, *red);
    if (++steps % 8 == 0 && !work.empty()) {
      Integer content = 0;
      for (const auto& kv : work) gcd(content, content, kv.second);
      for (const auto& kv : rem) gcd(content, content, kv.second);
      if (content > 1) {
        for (auto& kv : work) divexact(kv.second, kv.second, content);
        for (auto& kv : rem) divexact(kv.second, kv.second, content);
      }
    }
  }
  IPoly out;
  out.terms = std::move(rem);
  make_primitive(out);
  return out;
}

IPoly spoly(const IPoly& f, const IPoly& g, MonomialOrder order) {
  const Mono l = lcm_of(f.lm(), g.lm());
  Integer gg;
  gcd(gg, f.lc(), g.lc());
  TermMap acc(Desc{order});
  axpy(acc, Integer(g.lc() / gg), minus(l, f.lm()), f);
  axpy(acc, Integer(-(f.lc() / gg)), minus(l, g.lm()), g);
  IPoly out;
  for (auto& kv : acc) out.terms.emplace_back(kv.first, std::move(kv.second));
  make_primitive(out);
  return out;
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

}  // namespace

std::vector<BiPoly> buchberger(const std::vector<BiPoly>& gens, MonomialOrder order) {
  std::vector<IPoly> polys;
  std::vector<std::size_t> basis;  // indices into polys currently in G
  std::vector<Pair> pairs;
  const auto one = std::vector<BiPoly>{BiPoly::constant(1)};

  // Gebauer-Moeller update with the new element at index h.
  auto update = [&](std::size_t h) {
    const Mono& lh = polys[h].lm();
    std::vector<Pair> candidates;
    for (std::size_t g : basis) candidates.push_back({g, h, lcm_of(polys[g].lm(), lh)});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = coprime(polys[p.i].lm(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (b == a) continue;
          const Mono& other = candidates[b].lcm;
          // Drop p when another pair's lcm properly divides p's lcm, or
          // equals it and that pair was already kept (ties keep one pair).
          if (divides(other, p.lcm) && (other != p.lcm || b < a)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!coprime(polys[p.i].lm(), lh)) fresh.push_back(p);
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      const bool drop = divides(lh, p.lcm) && lcm_of(polys[p.i].lm(), lh) != p.lcm &&
                        lcm_of(polys[p.j].lm(), lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    next.insert(next.end(), fresh.begin(), fresh.end());
    pairs = std::move(next);
    std::erase_if(basis, [&](std::size_t g) { return divides(lh, polys[g].lm()); });
    basis.push_back(h);
  };

  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    any = true;
    IPoly p = reduce_full(to_ipoly(g, order), polys, basis, order);
    if (p.is_zero()) continue;
    if (p.lm() == Mono{0, 0}) return one;
    polys.push_back(std::move(p));
    update(polys.size() - 1);
  }
  if (!any) throw InvalidArgument("buchberger: all generators are zero");

  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair& a, const Pair& b) { return monomial_greater(order, b.lcm, a.lcm); });
    const Pair p = *best;
    pairs.erase(best);
    IPoly s = spoly(polys[p.i], polys[p.j], order);
    if (s.is_zero()) continue;
    IPoly h = reduce_full(std::move(s), polys, basis, order);
    if (h.is_zero()) continue;
    if (h.lm() == Mono{0, 0}) return one;
    polys.push_back(std::move(h));
    update(polys.size() - 1);
  }

  // basis is already minimal (update removes elements with divisible leading
  // monomials); interreduce tails.
  std::vector<IPoly> reduced;
  for (std::size_t idx : basis) {
    std::vector<std::size_t> others;
    for (std::size_t o : basis)
      if (o != idx) others.push_back(o);
    // The leading term survives: no other leading monomial divides it.
    IPoly r = reduce_full(polys[idx], polys, others, order);
    reduced.push_back(std::move(r));
  }
  std::vector<BiPoly> out;
  for (const auto& r : reduced) out.push_back(to_bipoly(r, true));
  std::sort(out.begin(), out.end(), [&](const BiPoly& a, const BiPoly& b) {
    return monomial_greater(order, leading_monomial(b, order), leading_monomial(a, order));
  });
  return out;
}

BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, MonomialOrder order) {
  const Mono lf = leading_monomial(f, order), lg = leading_monomial(g, order);
  const Mono l = lcm_of(lf, lg);
  const BiPoly mf = BiPoly::term(1 / f.coeff(lf), minus(l, lf));
  const BiPoly mg = BiPoly::term(1 / g.coeff(lg), minus(l, lg));
  return mf * f - mg * g;
}

BiPoly reduce(const BiPoly& p, const std::vector<BiPoly>& basis, MonomialOrder order) {
  if (p.is_zero()) return p;
  return divmod_multi(p, basis, order).remainder;
}

bool is_unit_ideal(const std::vector<BiPoly>& basis) {
  return basis.size() == 1 && basis.front() == BiPoly::constant(1);
}

}  // namespace ncontact
