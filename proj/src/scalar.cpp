#include "matpow/scalar.hpp"

#include "matpow/error.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace matpow {

std::string_view flavor_name(Flavor flavor) {
  return flavor == Flavor::exact ? "exact" : "float";
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw InvalidInputError("not a rational number: \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw InvalidInputError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational exact_from_double(double value) {
  if (!std::isfinite(value)) throw InvalidInputError("non-finite value has no exact form");
  Rational r(value);
  r.canonicalize();
  return r;
}

Complex ipow(Complex base, unsigned long exponent) {
  Complex result(1.0, 0.0);
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace matpow
