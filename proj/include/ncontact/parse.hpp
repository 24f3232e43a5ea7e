#pragma once

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncontact/error.hpp"
#include "ncontact/sparse_poly.hpp"

namespace ncontact {

/// Named constants substituted while parsing (e.g. curve-family parameters).
using Bindings = std::map<std::string, Rational>;

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' uint)?
// base   := rational | var | '(' expr ')'
// rational := int ('/' uint)?
// The optional leading sign lets canonical output ("-x^2 + ...") parse back.
template <std::size_t N>
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, const Bindings& bindings)
      : text_(text), vars_(vars), bindings_(bindings) {}

  SparsePoly<N> parse() {
    SparsePoly<N> p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  SparsePoly<N> expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    SparsePoly<N> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  SparsePoly<N> term() {
    SparsePoly<N> acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  SparsePoly<N> factor() {
    SparsePoly<N> b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      Integer e = digits("exponent");
      if (e > 4096) throw SyntaxError("exponent too large", start);
      b = ncontact::pow(b, static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Integer digits(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(std::string("expected ") + what, start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  SparsePoly<N> base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      SparsePoly<N> inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits("integer");
      Integer den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = digits("denominator");
        if (den == 0) throw SyntaxError("zero denominator", at);
      }
      return SparsePoly<N>::constant(make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return SparsePoly<N>::variable(i);
      if (auto it = bindings_.find(name); it != bindings_.end()) return SparsePoly<N>::constant(it->second);
      throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(start));
    }
    if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` as a polynomial in the given variables; vars[i] maps to
/// exponent slot i (at most N names).
template <std::size_t N>
SparsePoly<N> parse_poly(std::string_view text, const std::vector<std::string>& vars, const Bindings& bindings = {}) {
  if (vars.size() > N) throw InvalidArgument("too many variable names");
  return detail::PolyParser<N>(text, vars, bindings).parse();
}

inline BiPoly parse_bipoly(std::string_view text, const std::vector<std::string>& vars = {"x", "y"},
                           const Bindings& bindings = {}) {
  return parse_poly<2>(text, vars, bindings);
}

inline TernaryForm parse_ternary(std::string_view text, const std::vector<std::string>& vars = {"X", "Y", "Z"},
                                 const Bindings& bindings = {}) {
  return parse_poly<3>(text, vars, bindings);
}

inline UniPoly parse_unipoly(std::string_view text, const std::string& var = "x", const Bindings& bindings = {}) {
  const auto p = parse_poly<1>(text, {var}, bindings);
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1);
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e[0])] = c;
  return UniPoly(std::move(coeffs));
}

}  // namespace ncontact
