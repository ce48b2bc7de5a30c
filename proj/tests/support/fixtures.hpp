#pragma once

// Characteristic polynomials used throughout the tests, as low coefficients
// a_0..a_{k-1} of the monic polynomial.

#include "matpow/polynomial.hpp"

#include <string>
#include <vector>

namespace matpow::testing {

struct Fixture {
  std::string name;
  std::vector<long> low;
  bool distinct;
};

// (x-2)^2 (x-3)
inline const Fixture kDoubleTwo{"x^3-7x^2+16x-12", {-12, 16, -7}, false};
// x (x-2) (x-3)
inline const Fixture kZeroRoot{"x^3-5x^2+6x", {0, 6, -5}, true};
// (x-4)(x^4-x^3+6x^2+4x+1)
inline const Fixture kQuintic4{"x^5-5x^4+10x^3-20x^2-15x-4", {-4, -15, -20, 10, -5}, true};
inline const Fixture kRotation{"x^2+1", {1, 0}, true};
inline const Fixture kFibonacci{"x^2-x-1", {-1, -1}, true};
// (x-2)(x-3)(x+3)^2
inline const Fixture kQuartic{"x^4+x^3-15x^2-9x+54", {54, -9, -15, 1}, false};
// (x-1)(x-(2+i))^2 (x-(2-i))^2
inline const Fixture kComplexDouble{"x^5-9x^4+34x^3-66x^2+65x-25", {-25, 65, -66, 34, -9}, false};

inline std::vector<Fixture> all_fixtures() {
  return {kDoubleTwo, kZeroRoot, kQuintic4, kRotation, kFibonacci, kQuartic, kComplexDouble};
}

inline std::vector<Fixture> distinct_fixtures() {
  return {kZeroRoot, kQuintic4, kRotation, kFibonacci};
}

inline Polynomial<Rational> exact_poly(const Fixture& f) {
  std::vector<Rational> c;
  for (long a : f.low) c.emplace_back(a);
  return Polynomial<Rational>(std::move(c));
}

inline Polynomial<double> float_poly(const Fixture& f) {
  std::vector<double> c;
  for (long a : f.low) c.push_back(static_cast<double>(a));
  return Polynomial<double>(std::move(c));
}

/// Companion matrix whose characteristic polynomial is the fixture's.
inline SquareMatrix<Rational> companion(const Fixture& f) {
  const std::size_t k = f.low.size();
  SquareMatrix<Rational> m(k);
  for (std::size_t i = 1; i < k; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) m(i, k - 1) = -f.low[i];
  return m;
}

}  // namespace matpow::testing
