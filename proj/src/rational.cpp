#include "ordolab/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ordolab {

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational q(Integer(static_cast<long>(numerator)), Integer(static_cast<long>(denominator)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  Integer z(std::string(digits), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    const Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    Integer int_part = (whole.empty() || whole == "-" || whole == "+")
                           ? Integer(0)
                           : parse_integer(whole, text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer frac_part(std::string(frac), 10);
    if (int_part < 0) int_part = -int_part;
    Integer num = int_part * scale + frac_part;
    if (negative) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text, text));
}

long double to_long_double(const Rational& value) {
  // mpq_get_d truncates; good enough for the floating-point solver paths.
  return static_cast<long double>(value.get_d());
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  Rational q(value);
  q.canonicalize();
  return q;
}

}  // namespace ordolab
