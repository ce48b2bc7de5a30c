#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>

namespace matpow {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// The two arithmetic flavors: exact rationals (GMP) and IEEE doubles.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

enum class Flavor { exact, floating };

template <Scalar T>
inline constexpr Flavor flavor_of = std::same_as<T, Rational> ? Flavor::exact : Flavor::floating;

std::string_view flavor_name(Flavor flavor);

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Rational&) { return true; }

inline double magnitude(double x) { return std::abs(x); }
inline Rational magnitude(const Rational& x) { return Rational(abs(x)); }

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// InvalidInputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Exact rational equal to a finite double (doubles are dyadic rationals).
Rational exact_from_double(double value);

/// Complex integer power by repeated squaring.
Complex ipow(Complex base, unsigned long exponent);

}  // namespace matpow
