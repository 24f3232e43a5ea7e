#include "ncontact/elliptic.hpp"

#include "ncontact/division.hpp"
#include "ncontact/error.hpp"

namespace ncontact {

EllipticCurve::EllipticCurve(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), f_{c_, b_, a_, Rational(1)} {
  if (sgn(discriminant()) == 0) throw SingularCurve("singular cubic: y^2 = " + f_.to_string());
}

EllipticCurve EllipticCurve::from_poly(const UniPoly& f) {
  if (f.degree() != 3 || f.leading() != 1) throw InvalidCurvePoly("expected a monic cubic, got " + f.to_string());
  return EllipticCurve(f.coeff(2), f.coeff(1), f.coeff(0));
}

Rational EllipticCurve::discriminant() const {
  // x^3 + a x^2 + b x + c
  return a_ * a_ * b_ * b_ - 4 * b_ * b_ * b_ - 4 * a_ * a_ * a_ * c_ - 27 * c_ * c_ + 18 * a_ * b_ * c_;
}

BiPoly EllipticCurve::relation() const { return curve_relation(f_); }

bool EllipticCurve::contains(const Rational& x, const Rational& y) const { return y * y == f_(x); }

std::string EllipticCurve::to_string() const { return "y^2 = " + f_.to_string(); }

EPoint EPoint::infinity(const EllipticCurve& curve) { return EPoint(curve, std::nullopt); }

EPoint EPoint::affine(const EllipticCurve& curve, Rational x, Rational y) {
  if (!curve.contains(x, y))
    throw PointNotOnCurve("(" + ncontact::to_string(x) + ", " + ncontact::to_string(y) + ") is not on " +
                          curve.to_string());
  return EPoint(curve, std::make_pair(std::move(x), std::move(y)));
}

const Rational& EPoint::x() const {
  if (!coords_) throw InfinityPoint("the point at infinity has no affine coordinates");
  return coords_->first;
}

const Rational& EPoint::y() const {
  if (!coords_) throw InfinityPoint("the point at infinity has no affine coordinates");
  return coords_->second;
}

std::string EPoint::to_string() const {
  if (!coords_) return "O";
  return "(" + ncontact::to_string(coords_->first) + ", " + ncontact::to_string(coords_->second) + ")";
}

EPoint neg(const EPoint& p) {
  if (p.is_infinity()) return p;
  return EPoint::affine(p.curve(), p.x(), -p.y());
}

EPoint add(const EPoint& p, const EPoint& q) {
  if (!(p.curve() == q.curve())) throw CurveMismatch("points lie on different curves");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const EllipticCurve& e = p.curve();
  Rational lambda;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || sgn(p.y()) == 0) return EPoint::infinity(e);
    lambda = (3 * p.x() * p.x() + 2 * e.a() * p.x() + e.b()) / (2 * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = lambda * lambda - e.a() - p.x() - q.x();
  Rational y3 = lambda * (p.x() - x3) - p.y();
  return EPoint::affine(e, std::move(x3), std::move(y3));
}

EPoint scalar_mul(long k, const EPoint& p) {
  if (k < 0) return neg(scalar_mul(-k, p));
  EPoint result = EPoint::infinity(p.curve());
  EPoint base = p;
  auto n = static_cast<unsigned long>(k);
  while (n > 0) {
    if (n & 1ul) result = add(result, base);
    n >>= 1ul;
    if (n > 0) base = add(base, base);
  }
  return result;
}

std::optional<int> order_of(const EPoint& p, int bound) {
  if (bound < 1) throw InvalidArgument("order_of: bound must be positive");
  EPoint acc = p;
  for (int k = 1; k <= bound; ++k) {
    if (acc.is_infinity()) return k;
    acc = add(acc, p);
  }
  return std::nullopt;
}

BiPoly tangent_line(const EPoint& p) {
  if (p.is_infinity()) throw InfinityPoint("tangent line at O is the line at infinity");
  const BiPoly x = bx(), y = by();
  if (sgn(p.y()) == 0) return x - BiPoly::constant(p.x());
  const Rational m = p.curve().f().derivative()(p.x()) / (2 * p.y());
  return y - BiPoly::constant(p.y()) - m * (x - BiPoly::constant(p.x()));
}

BiPoly chord_line(const EPoint& p, const EPoint& q) {
  if (p.is_infinity() || q.is_infinity()) throw InfinityPoint("chord through O is vertical at infinity");
  if (!(p.curve() == q.curve())) throw CurveMismatch("points lie on different curves");
  if (p == q) throw EqualPoints("chord_line needs distinct points; use tangent_line");
  const BiPoly x = bx(), y = by();
  if (p.x() == q.x()) return x - BiPoly::constant(p.x());
  const Rational m = (q.y() - p.y()) / (q.x() - p.x());
  return y - BiPoly::constant(p.y()) - m * (x - BiPoly::constant(p.x()));
}

}  // namespace ncontact
