#include "momentcf/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "momentcf/errors.hpp"

namespace momentcf {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Rational pow_rational(const Rational& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_rational: negative exponent");
  Rational result(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  const Integer sn = sqrt(num);
  if (sn * sn != num) return std::nullopt;
  const Integer sd = sqrt(den);
  if (sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::vector<Integer> pascal_row(int n) {
  if (n < 0) throw std::invalid_argument("pascal_row: negative n");
  std::vector<Integer> row{Integer(1)};
  for (int m = 1; m <= n; ++m) {
    row.push_back(Integer(1));
    for (int k = m - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return row;
}

std::string to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(std::string_view text) {
  const std::string shown(text);
  if (text.empty()) throw ParseError("empty number");
  if (text.find('.') != std::string_view::npos)
    throw ParseError("decimal input is not accepted, write an exact rational p/q: '" +
                     shown + "'");

  auto parse_int = [&shown](std::string_view part, bool allow_sign) -> Integer {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) {
      negative = part[i] == '-';
      ++i;
    }
    if (i == part.size()) throw ParseError("malformed rational '" + shown + "'");
    Integer value(0);
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ParseError("malformed rational '" + shown + "'");
      value = value * 10 + (part[i] - '0');
    }
    return negative ? Integer(-value) : value;
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  const Integer num = parse_int(text.substr(0, slash), true);
  const Integer den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw ParseError("zero denominator in '" + shown + "'");
  return Rational(num, den);
}

}  // namespace momentcf
