#include "matpow/error.hpp"
#include "matpow/polynomial.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

using namespace matpow;
using namespace matpow::testing;

namespace {

SquareMatrix<Rational> exact_matrix(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return SquareMatrix<Rational>::from_rows(r);
}

Polynomial<Rational> rpoly(std::vector<long> low) { return Polynomial<Rational>({low.begin(), low.end()}); }

}  // namespace

TEST_CASE("char_poly of the Fibonacci, identity and rotation matrices") {
  CHECK(char_poly(exact_matrix({{1, 1}, {1, 0}})) == rpoly({-1, -1}));
  CHECK(char_poly(exact_matrix({{1, 0}, {0, 1}})) == rpoly({1, -2}));
  CHECK(char_poly(exact_matrix({{1, 2}, {-1, -1}})) == rpoly({1, 0}));
}

TEST_CASE("char_poly keeps rational entries exact") {
  std::vector<std::vector<Rational>> rows{{Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(-1, 5)}};
  const auto p = char_poly(SquareMatrix<Rational>::from_rows(rows));
  // x^2 - (3/10) x + (-1/10 - 2/3)
  CHECK(p[1] == Rational(-3, 10));
  CHECK(p[0] == Rational(-23, 30));
}

TEST_CASE("matrix construction rejects bad shapes and values") {
  CHECK_THROWS_AS(SquareMatrix<Rational>::from_rows({{1, 2}, {3}}), DimensionError);
  CHECK_THROWS_AS(SquareMatrix<Rational>::from_rows({{1, 2}}), DimensionError);
  CHECK_THROWS_AS(SquareMatrix<Rational>::from_rows({}), DimensionError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SquareMatrix<double>::from_rows({{1.0, nan}, {0.0, 1.0}}), InvalidInputError);
  CHECK_THROWS_AS(Polynomial<double>({1.0, std::numeric_limits<double>::infinity()}), InvalidInputError);
  CHECK_THROWS_AS(Polynomial<Rational>({}), InvalidInputError);
}

TEST_CASE("char_poly satisfies Cayley-Hamilton and matches det(xI - M)") {
  std::mt19937_64 rng(20240501);
  for (std::size_t dim = 1; dim <= 6; ++dim) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto m = random_int_matrix(rng, dim, -9, 9);
      const auto p = char_poly(m);
      REQUIRE(p.degree() == dim);
      CHECK(cayley_hamilton_residual(m, p) == 0);
      const auto ref = charpoly_by_interpolation(m);
      REQUIRE(ref.size() == dim + 1);
      CHECK(ref[dim] == 1);
      for (std::size_t j = 0; j < dim; ++j) CHECK(p[j] == ref[j]);
      for (const Rational& a : p.low_coeffs()) CHECK(a.get_den() == 1);
    }
  }
}

TEST_CASE("floating char_poly passes its residual check and tracks the exact one") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (std::size_t dim = 1; dim <= 6; ++dim) {
    SquareMatrix<double> m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = dist(rng);
    }
    const auto pf = char_poly(m);
    SquareMatrix<Rational> exact(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) exact(i, j) = exact_from_double(m(i, j));
    }
    const auto pe = char_poly(exact);
    const double scale = std::pow(std::max(1.0, m.norm_inf()), static_cast<double>(dim));
    for (std::size_t j = 0; j < dim; ++j) CHECK(std::abs(pf[j] - pe[j].get_d()) <= 1e-12 * scale);
  }
}

TEST_CASE("eval_poly examples") {
  const auto rot = to_floating(rpoly({1, 0}));
  CHECK(std::abs(eval_poly(rot, Complex(0.0, 1.0))) == 0.0);
  CHECK(eval_poly(rpoly({-12, 16, -7}), Rational(2)) == 0);
  CHECK(eval_poly(rpoly({-1, -1}), Rational(2)) == 1);
  CHECK(eval_poly(to_floating(rpoly({-1, -1})), 2.0) == 1.0);
}

TEST_CASE("eval_poly exact and floating flavors agree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (int trial = 0; trial < 300; ++trial) {
    const auto low = random_low_coeffs(rng, 1 + trial % 8, -1000, 1000);
    const auto pe = rpoly(low);
    const auto pf = to_floating(pe);
    Rational s(num(rng), den(rng));
    s.canonicalize();
    if (abs(s) > 10) s = s / 100;
    const double sf = s.get_d();
    const Rational exact = eval_poly(pe, s);
    double scale = std::pow(std::abs(sf), static_cast<double>(low.size()));
    for (std::size_t j = 0; j < low.size(); ++j) scale += std::abs(static_cast<double>(low[j])) * std::pow(std::abs(sf), j);
    CHECK(std::abs(eval_poly(pf, sf) - exact.get_d()) <= 1e-12 * scale);
  }
}

TEST_CASE("derivative_m examples and edge cases") {
  const auto p = rpoly({-12, 16, -7});
  const auto d1 = derivative_m(p, 1);
  CHECK(d1 == DensePolynomial<Rational>({16, -14, 3}));
  CHECK(d1(Rational(3)) == 1);
  CHECK(derivative_m(p, 0) == to_dense(p));
  CHECK(derivative_m(p, 3) == DensePolynomial<Rational>({6}));
  CHECK(derivative_m(p, 4).is_zero());
  CHECK(derivative_m(p, 9).is_zero());

  const auto quartic = rpoly({54, -9, -15, 1});
  CHECK(derivative_m(quartic, 2)(Rational(-3)) == 60);
  CHECK(derivative_m(to_floating(quartic), 2)(Complex(-3.0, 0.0)) == Complex(60.0, 0.0));
}

TEST_CASE("derivative_m composes additively") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = rpoly(random_low_coeffs(rng, 1 + trial % 7, -50, 50));
    const auto k = static_cast<unsigned>(p.degree());
    for (unsigned a = 0; a <= k; ++a) {
      for (unsigned b = 0; a + b <= k; ++b) CHECK(derivative_m(derivative_m(p, a), b) == derivative_m(p, a + b));
    }
  }
}

TEST_CASE("partial_poly examples and range") {
  const auto p = rpoly({-12, 16, -7});
  CHECK(partial_poly(p, 1) == DensePolynomial<Rational>({-12, 16}));
  CHECK(partial_poly(p, 2) == DensePolynomial<Rational>({-12, 16, -7}));
  CHECK(partial_poly(p, -1).is_zero());
  CHECK(partial_poly(p, 0) == DensePolynomial<Rational>({-12}));
  CHECK_THROWS_AS(partial_poly(p, 3), RangeError);
  CHECK_THROWS_AS(partial_poly(p, -2), RangeError);
}

TEST_CASE("the last prefix polynomial is P minus its leading power") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> sdist(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = rpoly(random_low_coeffs(rng, 1 + trial % 8, -100, 100));
    const long k = static_cast<long>(p.degree());
    Rational s(sdist(rng), 3);
    s.canonicalize();
    Rational sk = 1;
    for (long i = 0; i < k; ++i) sk *= s;
    CHECK(partial_poly(p, k - 1)(s) == eval_poly(p, s) - sk);
  }
}
