#pragma once

#include <optional>
#include <string>

#include "ncontact/sparse_poly.hpp"
#include "ncontact/unipoly.hpp"

namespace ncontact {

/// E: y^2 = x^3 + a x^2 + b x + c with nonzero discriminant.
class EllipticCurve {
 public:
  /// Throws SingularCurve when the cubic has a repeated root.
  EllipticCurve(Rational a, Rational b, Rational c);
  /// From a monic cubic; InvalidCurvePoly otherwise.
  static EllipticCurve from_poly(const UniPoly& f);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const UniPoly& f() const noexcept { return f_; }
  /// Discriminant of the cubic f.
  Rational discriminant() const;
  /// y^2 - f(x)
  BiPoly relation() const;
  bool contains(const Rational& x, const Rational& y) const;

  std::string to_string() const;

  friend bool operator==(const EllipticCurve& l, const EllipticCurve& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }

 private:
  Rational a_, b_, c_;
  UniPoly f_;
};

/// A rational point of an elliptic curve: the point at infinity O or an
/// affine point that satisfies the curve equation (checked on construction).
class EPoint {
 public:
  static EPoint infinity(const EllipticCurve& curve);
  /// PointNotOnCurve unless y^2 == f(x).
  static EPoint affine(const EllipticCurve& curve, Rational x, Rational y);

  bool is_infinity() const noexcept { return !coords_.has_value(); }
  /// InfinityPoint for O.
  const Rational& x() const;
  const Rational& y() const;
  const EllipticCurve& curve() const noexcept { return curve_; }

  std::string to_string() const;

  friend bool operator==(const EPoint& p, const EPoint& q) { return p.curve_ == q.curve_ && p.coords_ == q.coords_; }
  /// Orders affine points by (x, y); O sorts first. Curves are not compared.
  friend bool operator<(const EPoint& p, const EPoint& q) { return p.coords_ < q.coords_; }

 private:
  EPoint(EllipticCurve curve, std::optional<std::pair<Rational, Rational>> coords)
      : curve_(std::move(curve)), coords_(std::move(coords)) {}
  EllipticCurve curve_;
  std::optional<std::pair<Rational, Rational>> coords_;
};

/// Hyperelliptic involution (x, y) -> (x, -y); group negation.
EPoint neg(const EPoint& p);
/// Chord-tangent addition with O as zero. CurveMismatch across curves.
EPoint add(const EPoint& p, const EPoint& q);
/// [k]P by double-and-add; negative k negates.
EPoint scalar_mul(long k, const EPoint& p);

/// Least k in 1..bound with [k]P = O, or nullopt when P is not torsion of
/// order <= bound.
std::optional<int> order_of(const EPoint& p, int bound = 24);

/// Tangent line at an affine point: y - y_P - m (x - x_P) with
/// m = f'(x_P) / (2 y_P), or the vertical x - x_P when y_P = 0.
BiPoly tangent_line(const EPoint& p);

/// Line through two distinct affine points; vertical x - x_P when they share
/// x. EqualPoints when P == Q.
BiPoly chord_line(const EPoint& p, const EPoint& q);

}  // namespace ncontact
