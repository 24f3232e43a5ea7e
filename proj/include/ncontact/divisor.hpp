#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncontact/elliptic.hpp"
#include "ncontact/report.hpp"
#include "ncontact/sparse_poly.hpp"
#include "ncontact/unipoly.hpp"

namespace ncontact {

/// Effective divisor sum m_P P supported on affine rational points of one curve.
class EffectiveDivisor {
 public:
  explicit EffectiveDivisor(EllipticCurve curve) : curve_(std::move(curve)) {}
  EffectiveDivisor(EllipticCurve curve, const std::vector<std::pair<EPoint, int>>& points);

  /// Adds m >= 1 copies of an affine point of this curve.
  void add(const EPoint& p, int m = 1);

  const EllipticCurve& curve() const noexcept { return curve_; }
  const std::map<EPoint, int>& points() const noexcept { return points_; }
  int multiplicity(const EPoint& p) const;
  int degree() const;
  bool empty() const noexcept { return points_.empty(); }

  EffectiveDivisor scaled(int k) const;
  friend EffectiveDivisor operator+(const EffectiveDivisor& a, const EffectiveDivisor& b);
  friend bool operator==(const EffectiveDivisor& a, const EffectiveDivisor& b) {
    return a.curve_ == b.curve_ && a.points_ == b.points_;
  }

  /// "{ (x, y): m, ... }"
  std::string to_string() const;

 private:
  EllipticCurve curve_;
  std::map<EPoint, int> points_;
};

/// b0(x) + b1(x) y, an element of the coordinate ring in NF1 form, with an
/// optional residual point annotation.
struct FunctionRep {
  UniPoly b0, b1;
  EllipticCurve curve;
  std::optional<EPoint> p_o;

  /// Reduces any polynomial to NF1 form on `curve`.
  static FunctionRep from_poly(const BiPoly& g, const EllipticCurve& curve);
  BiPoly to_poly() const;
  bool is_zero() const { return b0.is_zero() && b1.is_zero(); }
  /// Value at an affine point.
  Rational operator()(const EPoint& p) const;
  /// iota^* : b0 - b1 y
  FunctionRep conjugate() const;
  /// Pole order at O: max(2 deg b0, 2 deg b1 + 3).
  int pole_order() const;
  /// Total degree of the plane curve b0 + b1 y = 0.
  int projective_degree() const;

  friend bool operator==(const FunctionRep& l, const FunctionRep& r) {
    return l.b0 == r.b0 && l.b1 == r.b1 && l.curve == r.curve;
  }
};

/// Product in k[x, y] / (y^2 - f).
FunctionRep multiply(const FunctionRep& a, const FunctionRep& b);
FunctionRep power(const FunctionRep& a, unsigned exponent);
/// Scalar multiple with coprime integer coefficients, positive leading
/// coefficient under the lex order y > x. Keeps the annotation.
FunctionRep canonical(const FunctionRep& g);

struct Fiber {
  Rational x;
  int count;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

struct Decomposition {
  EffectiveDivisor semi_reduced;
  /// Full fibers pi^*(x = x0), each repeated `count` times.
  std::vector<Fiber> fibers;
  /// The fibers as a divisor on the curve.
  EffectiveDivisor fiber_divisor() const;
};

/// d = d_sr + d_o with d_sr semi-reduced and d_o a sum of full fibers.
Decomposition decompose(const EffectiveDivisor& d);
bool is_semi_reduced(const EffectiveDivisor& d);

/// Pointwise minimum of multiplicities.
EffectiveDivisor divisor_gcd(const EffectiveDivisor& d1, const EffectiveDivisor& d2);

/// Group-law sum of the support counted with multiplicity.
EPoint divisor_sum_point(const EffectiveDivisor& d);

/// The function b0 + b1 y vanishing on d plus one residual point P_o, with
/// deg b0 <= (d + 1 - e) / 2, deg b1 <= (d - 3 + e) / 2, e = (d + 1) mod 2.
/// Returned in canonical scalar form, P_o in the annotation.
FunctionRep construct_b(const EffectiveDivisor& d);

/// Degree bounds (deg b0, deg b1) for a divisor of degree d; -1 means the
/// component must vanish.
std::pair<int, int> construct_b_degree_bounds(int d);

/// b0^2 - f b1^2
UniPoly norm(const FunctionRep& g);

struct ZeroDivisor {
  EffectiveDivisor divisor;
  /// Monic factor of the norm whose roots give no rational points.
  UniPoly unresolved;
};

/// Affine zeros of g at rational points, with multiplicities.
ZeroDivisor zero_divisor_rational(const FunctionRep& g);

struct MumfordPair {
  UniPoly u, v;
  friend bool operator==(const MumfordPair&, const MumfordPair&) = default;
};

/// (u, v) = (prod (x - x_i)^m_i, -b0 mod u) for b = y + b0 up to a constant.
MumfordPair mumford_pair(const EffectiveDivisor& d, const FunctionRep& b);

/// Checks the degree bounds, the zero divisor d + P_o, the residual-point sum,
/// the O-multiplicity nu and the gcd description of d for a function b.
Report verify_prop14(const EffectiveDivisor& d, const FunctionRep& b);

}  // namespace ncontact
