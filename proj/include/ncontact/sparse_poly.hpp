#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "ncontact/rational.hpp"
#include "ncontact/unipoly.hpp"

namespace ncontact {

template <std::size_t N>
using Exponents = std::array<int, N>;

template <std::size_t N>
int total_degree(const Exponents<N>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Canonical term order: total degree descending, then exponent vectors
/// lexicographically descending (x before y before z).
template <std::size_t N>
struct CanonicalTermOrder {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in N variables over Q. No zero coefficient is ever
/// stored, and iteration follows CanonicalTermOrder.
template <std::size_t N>
class SparsePoly {
 public:
  using Exp = Exponents<N>;
  using TermMap = std::map<Exp, Rational, CanonicalTermOrder<N>>;

  SparsePoly() = default;
  explicit SparsePoly(TermMap terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  }
  static SparsePoly constant(const Rational& c) { return term(c, Exp{}); }
  static SparsePoly term(const Rational& c, const Exp& e) {
    SparsePoly p;
    if (sgn(c) != 0) p.terms_.emplace(e, c);
    return p;
  }
  static SparsePoly variable(std::size_t index) {
    Exp e{};
    e[index] = 1;
    return term(1, e);
  }
  /// Embeds a univariate polynomial as a polynomial in variable `index`.
  static SparsePoly from_uni(const UniPoly& u, std::size_t index = 0) {
    SparsePoly p;
    for (int i = 0; i <= u.degree(); ++i) {
      Exp e{};
      e[index] = i;
      p.add_term(e, u.coeff(i));
    }
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exp& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// -1 for zero.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, ncontact::total_degree(e));
    return d;
  }
  /// -1 for zero.
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = ncontact::total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (ncontact::total_degree(e) != d) return false;
    return true;
  }

  Rational evaluate(const std::array<Rational, N>& at) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < N; ++i)
        if (e[i] > 0) t *= ncontact::pow(at[i], static_cast<unsigned>(e[i]));
      acc += t;
    }
    return acc;
  }

  SparsePoly partial(std::size_t var) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exp d = e;
      d[var] -= 1;
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  /// Collects the coefficient of each power of `var` as a univariate polynomial
  /// in `other`; only meaningful for N == 2.
  std::map<int, UniPoly> coefficients_in(std::size_t var) const
    requires(N == 2)
  {
    const std::size_t other = 1 - var;
    std::map<int, std::vector<Rational>> dense;
    for (const auto& [e, c] : terms_) {
      auto& v = dense[e[var]];
      if (v.size() <= static_cast<std::size_t>(e[other])) v.resize(static_cast<std::size_t>(e[other]) + 1);
      v[static_cast<std::size_t>(e[other])] = c;
    }
    std::map<int, UniPoly> out;
    for (auto& [k, v] : dense) out.emplace(k, UniPoly(std::move(v)));
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& k) {
    if (sgn(k) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
  friend SparsePoly operator*(SparsePoly a, const Rational& k) { return a *= k; }
  friend SparsePoly operator*(const Rational& k, SparsePoly a) { return a *= k; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: terms in CanonicalTermOrder, coefficients as reduced
  /// fractions, '*' between factors. Parses back to the same polynomial.
  std::string to_string(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      const Rational mag = abs(c);
      bool wrote = false;
      if (mag != 1 || ncontact::total_degree(e) == 0) {
        os << ncontact::to_string(mag);
        wrote = true;
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

template <std::size_t N>
SparsePoly<N> pow(const SparsePoly<N>& p, unsigned exponent) {
  SparsePoly<N> result = SparsePoly<N>::constant(1);
  SparsePoly<N> base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

/// Polynomial in x (index 0) and y (index 1).
using BiPoly = SparsePoly<2>;
/// Polynomial in X, Y, Z; homogeneous when used as a plane curve.
using TernaryForm = SparsePoly<3>;

inline const std::array<std::string, 2> kXY{"x", "y"};
inline const std::array<std::string, 3> kXYZ{"X", "Y", "Z"};

inline std::string to_string(const BiPoly& p) { return p.to_string(kXY); }
inline std::string to_string(const TernaryForm& p) { return p.to_string(kXYZ); }

inline BiPoly bx() { return BiPoly::variable(0); }
inline BiPoly by() { return BiPoly::variable(1); }

/// Scalar multiple with coprime integer coefficients whose largest monomial
/// under the lex order y > x (for N == 2) or the canonical term order has a
/// positive coefficient. Equal-up-to-scalar polynomials share this form.
template <std::size_t N>
SparsePoly<N> canonical_scalar(const SparsePoly<N>& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, n);
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  const Exponents<N>* top = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (top == nullptr) {
      top = &e;
      continue;
    }
    if constexpr (N == 2) {
      if (std::pair(e[1], e[0]) > std::pair((*top)[1], (*top)[0])) top = &e;
    }
  }
  if (sgn(p.coeff(*top)) < 0) scale = -scale;
  return p * scale;
}

/// True when a == c * b for some nonzero rational c.
template <std::size_t N>
bool equal_up_to_scalar(const SparsePoly<N>& a, const SparsePoly<N>& b) {
  return canonical_scalar(a) == canonical_scalar(b);
}

}  // namespace ncontact
