#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ncontact/rational.hpp"

namespace ncontact {

/// Dense univariate polynomial over Q; coeffs()[i] is the coefficient of x^i.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// x - root
  static UniPoly linear_factor(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Divided by its leading coefficient; zero stays zero.
  UniPoly monic() const;
  UniPoly derivative() const;
  /// p(x + a)
  UniPoly shifted(const Rational& a) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned exponent);

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// a / b, throwing NotDivisible when the remainder is nonzero.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) throws InvalidArgument.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

UniPoly squarefree_part(const UniPoly& p);

/// Scalar multiple with coprime integer coefficients and positive leading
/// coefficient.
UniPoly primitive_part(const UniPoly& p);

/// Largest e with (x - root)^e dividing p (p nonzero).
int root_multiplicity(const UniPoly& p, const Rational& root);

/// All rational roots with their multiplicities, sorted ascending.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p);

}  // namespace ncontact
