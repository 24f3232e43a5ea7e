#include "ncontact/rational.hpp"

#include "ncontact/error.hpp"

namespace ncontact {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InvalidArgument("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& n = r.get_num();
  const Integer& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return make_rational(Integer(sqrt(n)), Integer(sqrt(d)));
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

}  // namespace ncontact
