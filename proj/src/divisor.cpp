#include "ncontact/divisor.hpp"

#include <sstream>

#include "ncontact/division.hpp"
#include "ncontact/error.hpp"
#include "ncontact/linear.hpp"

namespace ncontact {

// ---------------------------------------------------------------------------
// EffectiveDivisor

EffectiveDivisor::EffectiveDivisor(EllipticCurve curve, const std::vector<std::pair<EPoint, int>>& points)
    : curve_(std::move(curve)) {
  for (const auto& [p, m] : points) add(p, m);
}

void EffectiveDivisor::add(const EPoint& p, int m) {
  if (m < 1) throw InvalidArgument("divisor multiplicities must be positive");
  if (p.is_infinity()) throw InvalidArgument("effective divisors here are supported on affine points");
  if (!(p.curve() == curve_)) throw CurveMismatch("point " + p.to_string() + " is not on the divisor's curve");
  points_[p] += m;
}

int EffectiveDivisor::multiplicity(const EPoint& p) const {
  auto it = points_.find(p);
  return it == points_.end() ? 0 : it->second;
}

int EffectiveDivisor::degree() const {
  int d = 0;
  for (const auto& [p, m] : points_) d += m;
  return d;
}

EffectiveDivisor EffectiveDivisor::scaled(int k) const {
  EffectiveDivisor out(curve_);
  if (k <= 0) return out;
  for (const auto& [p, m] : points_) out.add(p, m * k);
  return out;
}

EffectiveDivisor operator+(const EffectiveDivisor& a, const EffectiveDivisor& b) {
  if (!(a.curve_ == b.curve_)) throw CurveMismatch("divisors on different curves");
  EffectiveDivisor out = a;
  for (const auto& [p, m] : b.points_) out.add(p, m);
  return out;
}

std::string EffectiveDivisor::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [p, m] : points_) {
    os << (first ? " " : ", ") << p.to_string() << ": " << m;
    first = false;
  }
  os << (first ? "}" : " }");
  return os.str();
}

// ---------------------------------------------------------------------------
// FunctionRep

FunctionRep FunctionRep::from_poly(const BiPoly& g, const EllipticCurve& curve) {
  const BiPoly r = nf1(g, curve.f());
  auto parts = r.coefficients_in(1);
  FunctionRep out{parts[0], parts[1], curve, std::nullopt};
  return out;
}

BiPoly FunctionRep::to_poly() const { return BiPoly::from_uni(b0) + BiPoly::from_uni(b1) * by(); }

Rational FunctionRep::operator()(const EPoint& p) const { return b0(p.x()) + b1(p.x()) * p.y(); }

FunctionRep FunctionRep::conjugate() const { return FunctionRep{b0, -b1, curve, std::nullopt}; }

int FunctionRep::pole_order() const {
  int o = -1;
  if (!b0.is_zero()) o = 2 * b0.degree();
  if (!b1.is_zero()) o = std::max(o, 2 * b1.degree() + 3);
  return o;
}

int FunctionRep::projective_degree() const {
  int d = -1;
  if (!b0.is_zero()) d = b0.degree();
  if (!b1.is_zero()) d = std::max(d, b1.degree() + 1);
  return d;
}

FunctionRep multiply(const FunctionRep& a, const FunctionRep& b) {
  if (!(a.curve == b.curve)) throw CurveMismatch("functions on different curves");
  return FunctionRep{a.b0 * b.b0 + a.b1 * b.b1 * a.curve.f(), a.b0 * b.b1 + a.b1 * b.b0, a.curve, std::nullopt};
}

FunctionRep power(const FunctionRep& a, unsigned exponent) {
  FunctionRep result{UniPoly::constant(1), UniPoly{}, a.curve, std::nullopt};
  FunctionRep base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = multiply(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

FunctionRep canonical(const FunctionRep& g) {
  FunctionRep out = FunctionRep::from_poly(canonical_scalar(g.to_poly()), g.curve);
  out.p_o = g.p_o;
  return out;
}

UniPoly norm(const FunctionRep& g) { return g.b0 * g.b0 - g.curve.f() * g.b1 * g.b1; }

// ---------------------------------------------------------------------------
// Decomposition and gcd

EffectiveDivisor Decomposition::fiber_divisor() const {
  EffectiveDivisor out(semi_reduced.curve());
  const EllipticCurve& e = semi_reduced.curve();
  for (const auto& fib : fibers) {
    const Rational fx = e.f()(fib.x);
    auto root = rational_sqrt(fx);
    if (!root) throw InvalidArgument("fiber over a point without rational y");
    if (sgn(*root) == 0) {
      out.add(EPoint::affine(e, fib.x, 0), 2 * fib.count);
    } else {
      out.add(EPoint::affine(e, fib.x, *root), fib.count);
      out.add(EPoint::affine(e, fib.x, -*root), fib.count);
    }
  }
  return out;
}

Decomposition decompose(const EffectiveDivisor& d) {
  Decomposition out{EffectiveDivisor(d.curve()), {}};
  for (const auto& [p, m] : d.points()) {
    if (sgn(p.y()) == 0) {
      if (m / 2 > 0) out.fibers.push_back({p.x(), m / 2});
      if (m % 2 == 1) out.semi_reduced.add(p, 1);
      continue;
    }
    const EPoint q = neg(p);
    const int mq = d.multiplicity(q);
    const int paired = std::min(m, mq);
    // Each conjugate pair is visited from both sides; record fibers once.
    if (paired > 0 && sgn(p.y()) > 0) out.fibers.push_back({p.x(), paired});
    if (m > paired) out.semi_reduced.add(p, m - paired);
  }
  return out;
}

bool is_semi_reduced(const EffectiveDivisor& d) { return decompose(d).fibers.empty(); }

EffectiveDivisor divisor_gcd(const EffectiveDivisor& d1, const EffectiveDivisor& d2) {
  if (!(d1.curve() == d2.curve())) throw CurveMismatch("gcd of divisors on different curves");
  EffectiveDivisor out(d1.curve());
  for (const auto& [p, m] : d1.points()) {
    const int k = std::min(m, d2.multiplicity(p));
    if (k > 0) out.add(p, k);
  }
  return out;
}

EPoint divisor_sum_point(const EffectiveDivisor& d) {
  EPoint acc = EPoint::infinity(d.curve());
  for (const auto& [p, m] : d.points()) acc = add(acc, scalar_mul(m, p));
  return acc;
}

// ---------------------------------------------------------------------------
// Local expansions along the curve

namespace {

// Coefficients y_0..y_{order-1} of the branch y(s) of y^2 = f(x0 + s) through
// (x0, y0), y0 != 0.
std::vector<Rational> branch_series(const EllipticCurve& e, const Rational& x0, const Rational& y0, int order) {
  const UniPoly shifted = e.f().shifted(x0);
  std::vector<Rational> y(static_cast<std::size_t>(std::max(order, 1)));
  y[0] = y0;
  for (int k = 1; k < order; ++k) {
    Rational acc = shifted.coeff(k);
    for (int i = 1; i < k; ++i) acc -= y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
    y[static_cast<std::size_t>(k)] = acc / (2 * y0);
  }
  return y;
}

// Truncated series of u(x0 + s) * w(s) for polynomial u and series w.
std::vector<Rational> times_series(const UniPoly& u, const Rational& x0, const std::vector<Rational>& w, int order) {
  const UniPoly us = u.shifted(x0);
  std::vector<Rational> out(static_cast<std::size_t>(order));
  for (int i = 0; i < order && i <= us.degree(); ++i)
    for (int j = 0; i + j < order && j < static_cast<int>(w.size()); ++j)
      out[static_cast<std::size_t>(i + j)] += us.coeff(i) * w[static_cast<std::size_t>(j)];
  return out;
}

// Expansion of g along the branch through p in the local parameter x - x_p.
std::vector<Rational> local_expansion(const FunctionRep& g, const EPoint& p, int order) {
  const auto ys = branch_series(g.curve, p.x(), p.y(), order);
  std::vector<Rational> one(1, Rational(1));
  auto a = times_series(g.b0, p.x(), one, order);
  auto b = times_series(g.b1, p.x(), ys, order);
  for (int i = 0; i < order; ++i) a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
  return a;
}

}  // namespace

std::pair<int, int> construct_b_degree_bounds(int d) {
  const int eps = (d + 1) % 2;
  const int d0 = (d + 1 - eps) / 2;
  const int d1 = d - 3 + eps >= 0 ? (d - 3 + eps) / 2 : -1;
  return {d0, d1};
}

FunctionRep construct_b(const EffectiveDivisor& d) {
  if (!is_semi_reduced(d)) throw InvalidArgument("construct_b needs a semi-reduced divisor, got " + d.to_string());
  const EllipticCurve& e = d.curve();
  const auto [deg0, deg1] = construct_b_degree_bounds(d.degree());
  const int n0 = deg0 + 1;
  const int n1 = deg1 + 1;
  const int unknowns = n0 + n1;

  std::vector<std::vector<Rational>> rows;
  for (const auto& [p, m] : d.points()) {
    if (sgn(p.y()) == 0) {
      std::vector<Rational> row(static_cast<std::size_t>(unknowns));
      for (int i = 0; i < n0; ++i) row[static_cast<std::size_t>(i)] = ncontact::pow(p.x(), static_cast<unsigned>(i));
      rows.push_back(std::move(row));
      continue;
    }
    const auto ys = branch_series(e, p.x(), p.y(), m);
    std::vector<std::vector<Rational>> cols;
    std::vector<Rational> one(1, Rational(1));
    for (int i = 0; i < n0; ++i) cols.push_back(times_series(UniPoly::monomial(1, i), p.x(), one, m));
    for (int i = 0; i < n1; ++i) cols.push_back(times_series(UniPoly::monomial(1, i), p.x(), ys, m));
    for (int k = 0; k < m; ++k) {
      std::vector<Rational> row(static_cast<std::size_t>(unknowns));
      for (int c = 0; c < unknowns; ++c) row[static_cast<std::size_t>(c)] = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
      rows.push_back(std::move(row));
    }
  }

  std::vector<Rational> coeffs;
  if (rows.empty()) {
    coeffs.assign(static_cast<std::size_t>(unknowns), Rational(0));
    if (unknowns != 1) throw DegenerateSystem("empty divisor with more than one free coefficient");
    coeffs[0] = 1;
  } else {
    std::vector<Rational> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    const Matrix a(rows.size(), static_cast<std::size_t>(unknowns), std::move(flat));
    const auto sol = solve_linear(a, Vector(rows.size(), Rational(0)));
    if (sol.kind != LinearSolution::Kind::WithNullspace || sol.nullspace.size() != 1)
      throw DegenerateSystem("interpolation for " + d.to_string() + " does not have a one-dimensional solution space");
    coeffs = sol.nullspace.front();
  }
  std::vector<Rational> c0(coeffs.begin(), coeffs.begin() + n0);
  std::vector<Rational> c1(coeffs.begin() + n0, coeffs.end());
  FunctionRep b{UniPoly(std::move(c0)), UniPoly(std::move(c1)), e, std::nullopt};
  b = canonical(b);

  const EPoint residual = neg(divisor_sum_point(d));
  if (residual.is_infinity()) {
    if (b.pole_order() != d.degree())
      throw DegenerateSystem("residual point is O but the pole order of b is " + std::to_string(b.pole_order()));
  } else if (sgn(b(residual)) != 0) {
    throw DegenerateSystem("constructed function does not vanish at the residual point " + residual.to_string());
  }
  b.p_o = residual;
  return b;
}

// ---------------------------------------------------------------------------
// Zero divisors

ZeroDivisor zero_divisor_rational(const FunctionRep& g) {
  if (g.is_zero()) throw InvalidArgument("zero divisor of the zero function");
  const EllipticCurve& e = g.curve;
  const UniPoly n = norm(g);
  ZeroDivisor out{EffectiveDivisor(e), n.monic()};
  if (n.degree() < 1) {
    out.unresolved = UniPoly::constant(1);
    return out;
  }
  for (const auto& [x0, mult] : rational_roots(n)) {
    const auto y0 = rational_sqrt(e.f()(x0));
    if (!y0) continue;
    out.unresolved = exact_quotient(out.unresolved, pow(UniPoly::linear_factor(x0), static_cast<unsigned>(mult)));
    if (sgn(*y0) == 0) {
      out.divisor.add(EPoint::affine(e, x0, 0), mult);
      continue;
    }
    const EPoint plus = EPoint::affine(e, x0, *y0);
    const auto series = local_expansion(g, plus, mult);
    int k = 0;
    while (k < mult && sgn(series[static_cast<std::size_t>(k)]) == 0) ++k;
    if (k > 0) out.divisor.add(plus, k);
    if (mult - k > 0) out.divisor.add(neg(plus), mult - k);
  }
  out.unresolved = out.unresolved.monic();
  return out;
}

// ---------------------------------------------------------------------------
// Mumford representation

MumfordPair mumford_pair(const EffectiveDivisor& d, const FunctionRep& b) {
  if (b.b1.degree() != 0) throw ShapeError("mumford_pair expects b = c (y + b0) with c a nonzero constant");
  UniPoly u = UniPoly::constant(1);
  for (const auto& [p, m] : d.points()) u *= pow(UniPoly::linear_factor(p.x()), static_cast<unsigned>(m));
  const UniPoly b0 = b.b0 * (1 / b.b1.leading());
  const UniPoly v = divmod(-b0, u).second;
  if (!divmod(v * v - d.curve().f(), u).second.is_zero())
    throw InvalidRepresentation("v^2 - f is not divisible by u for " + d.to_string());
  return {u, v};
}

// ---------------------------------------------------------------------------
// Consistency report for a divisor and its interpolating function

Report verify_prop14(const EffectiveDivisor& d, const FunctionRep& b) {
  Report r("function for divisor " + d.to_string());
  const int deg = d.degree();
  r.add("degree", std::to_string(deg));
  r.add("b", to_string(b.to_poly()));

  const auto [d0, d1] = construct_b_degree_bounds(deg);
  r.add_check("degree_bounds", b.b0.degree() <= d0 && b.b1.degree() <= d1);

  const EPoint residual = b.p_o ? *b.p_o : neg(divisor_sum_point(d));
  r.add("residual_point", residual.to_string());
  r.add_check("residual_sum", add(divisor_sum_point(d), residual).is_infinity());

  EffectiveDivisor expected = d;
  if (!residual.is_infinity()) expected.add(residual);
  const auto zeros = zero_divisor_rational(b);
  r.add("zero_divisor", zeros.divisor.to_string());
  r.add_check("zero_divisor", zeros.divisor == expected && zeros.unresolved.degree() == 0);

  const int nu = 3 * b.projective_degree() - (deg + 1);
  r.add("nu", std::to_string(nu));
  r.add_check("nu", nu >= 0 && nu <= 2 && (deg + 1 + nu) % 3 == 0);

  // A vertical b shares its whole fiber with u, so the gcd description only
  // applies when b involves y.
  if (b.b1.is_zero()) {
    r.add("gcd_description", "not applicable (b is a function of x)");
    return r;
  }
  UniPoly u = UniPoly::constant(1);
  for (const auto& [p, m] : d.points()) u *= pow(UniPoly::linear_factor(p.x()), static_cast<unsigned>(m));
  const auto fiber_zeros = zero_divisor_rational(FunctionRep{u, UniPoly{}, d.curve(), std::nullopt});
  r.add_check("gcd_description", divisor_gcd(fiber_zeros.divisor, zeros.divisor) == d);
  return r;
}

}  // namespace ncontact
