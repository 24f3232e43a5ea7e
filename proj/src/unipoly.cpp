#include "ncontact/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "ncontact/error.hpp"

namespace ncontact {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_factor(const Rational& root) { return UniPoly{Rational(-root), Rational(1)}; }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(const Rational& a) const {
  // Horner in the ring: p(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...)
  UniPoly step{a, Rational(1)};
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * step;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << ncontact::to_string(mag);
      continue;
    }
    if (!unit) os << ncontact::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly pow(const UniPoly& p, unsigned exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Rational inv_lc = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv_lc;
    if (sgn(c) == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("univariate division by " + b.to_string() + " is not exact", r.to_string());
  return q;
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  UniPoly a = p.monic();
  UniPoly b = q.monic();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return UniPoly::constant(1);
  return exact_quotient(p, uni_gcd(p, p.derivative())).monic();
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, n);
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (sgn(p.leading()) < 0) scale = -scale;
  return p * scale;
}

int root_multiplicity(const UniPoly& p, const Rational& root) {
  if (p.is_zero()) throw InvalidArgument("root multiplicity in the zero polynomial");
  int e = 0;
  UniPoly cur = p;
  const UniPoly lin = UniPoly::linear_factor(root);
  while (cur.degree() >= 1 && sgn(cur(root)) == 0) {
    cur = exact_quotient(cur, lin);
    ++e;
  }
  return e;
}

namespace {

int sign_changes(const std::vector<UniPoly>& chain, const Rational& at) {
  int changes = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const int v = sgn(s(at));
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++changes;
    prev = v;
  }
  return changes;
}

// Integer roots of a monic polynomial with integer coefficients and no repeated
// factors, found by Sturm bisection on the half-integer grid.
std::vector<Integer> integer_roots_of_squarefree_monic(const UniPoly& q) {
  std::vector<UniPoly> chain{q, q.derivative()};
  while (chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  Integer bound = 0;
  for (const auto& c : q.coeffs()) {
    Integer m = abs(c.get_num());
    if (m > bound) bound = m;
  }
  bound += 1;

  std::vector<Integer> roots;
  const Rational half = make_rational(1, 2);
  // Work list of integer ranges (lo, hi]; endpoints offset by 1/2 are never roots.
  std::vector<std::pair<Integer, Integer>> work{{Integer(-bound - 1), bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int count = sign_changes(chain, Rational(lo) + half) - sign_changes(chain, Rational(hi) + half);
    if (count == 0) continue;
    if (hi - lo == 1) {
      if (sgn(q(Rational(hi))) == 0) roots.push_back(hi);
      continue;
    }
    Integer mid = lo + (hi - lo) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  return roots;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() < 1) return out;
  const UniPoly s = primitive_part(squarefree_part(p));
  const int k = s.degree();
  // z = lc * x turns s into a monic integer polynomial whose rational roots
  // are integers.
  const Integer lc = s.leading().get_num();
  std::vector<Rational> qc(static_cast<std::size_t>(k) + 1);
  Integer scale = 1;
  for (int i = k - 1; i >= 0; --i) {
    qc[static_cast<std::size_t>(i)] = s.coeff(i) * Rational(scale);
    scale *= lc;
  }
  qc[static_cast<std::size_t>(k)] = 1;
  for (const auto& z : integer_roots_of_squarefree_monic(UniPoly(std::move(qc)))) {
    Rational root = make_rational(z, lc);
    out.emplace_back(root, root_multiplicity(p, root));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace ncontact
