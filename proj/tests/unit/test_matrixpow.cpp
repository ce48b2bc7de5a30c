#include "matpow/error.hpp"
#include "matpow/matrixpow.hpp"
#include "matpow/polynomial.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "doctest.h"

#include <random>

using namespace matpow;
using namespace matpow::testing;

namespace {

using QMatrix = SquareMatrix<Rational>;

QMatrix rows(std::vector<std::vector<Rational>> r) { return QMatrix::from_rows(r); }

QMatrix via_recurrence(const QMatrix& m, long n) {
  return matrix_power_via_coeffs(m, coeffs_recurrence(char_poly(m), n));
}

const QMatrix kFib = rows({{1, 1}, {1, 0}});
const QMatrix kOrder4 = rows({{1, 2}, {-1, -1}});

}  // namespace

TEST_CASE("reconstruction examples") {
  CHECK(via_recurrence(kFib, 10) == rows({{89, 55}, {55, 34}}));
  CHECK(via_recurrence(kOrder4, 4) == QMatrix::identity(2));
  CHECK(via_recurrence(rows({{2, 0}, {0, 3}}), 5) == rows({{32, 0}, {0, 243}}));

  const QMatrix minus_i = rows({{-1, 0}, {0, -1}});
  for (long n = 2; n <= 13; ++n) {
    CAPTURE(n);
    const QMatrix expect = n % 4 == 0   ? QMatrix::identity(2)
                           : n % 4 == 1 ? kOrder4
                           : n % 4 == 2 ? minus_i
                                        : QMatrix(minus_i * kOrder4);
    CHECK(via_recurrence(kOrder4, n) == expect);
  }
}

TEST_CASE("binary exponentiation") {
  CHECK(matrix_power_binary(kFib, 0) == QMatrix::identity(2));
  CHECK(matrix_power_binary(companion(kQuartic), 0) == QMatrix::identity(4));
  CHECK(matrix_power_binary(kFib, 10) == rows({{89, 55}, {55, 34}}));
  CHECK(matrix_power_binary(kOrder4, 2) == rows({{-1, 0}, {0, -1}}));
  CHECK_THROWS_AS(matrix_power_binary(kFib, -1), RangeError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_int_matrix(rng, 1 + trial % 4, -4, 4);
    for (long n : {1L, 2L, 5L, 16L, 33L}) CHECK(matrix_power_binary(m, n) == naive_power(m, n));
  }
}

TEST_CASE("recurrence reconstruction equals the oracle on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 4);
    const auto m = random_int_matrix(rng, dim, -5, 5);
    const auto p = char_poly(m);
    const long k = static_cast<long>(dim);
    for (long n : {k, k + 1, 7L, 20L, 51L}) {
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(matrix_power_via_coeffs(m, coeffs_recurrence(p, n)) == matrix_power_binary(m, n));
    }

    // At n = k the reconstruction is -sum a_j M^j, i.e. M^k.
    QMatrix ch(dim);
    QMatrix pw = QMatrix::identity(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      ch = ch - pw * p[j];
      pw = pw * m;
    }
    CHECK(ch == pw);
    CHECK(matrix_power_via_coeffs(m, coeffs_recurrence(p, k)) == ch);
  }
}

TEST_CASE("semigroup property of reconstructed powers") {
  for (const Fixture& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto m = companion(f);
    const long k = static_cast<long>(f.low.size());
    for (auto [a, b] : {std::pair{k, k}, std::pair{k + 3, 2 * k}, std::pair{17L, 9L}}) {
      if (a < k || b < k) continue;
      CHECK(via_recurrence(m, a + b) == via_recurrence(m, a) * via_recurrence(m, b));
    }
  }
}

TEST_CASE("floating reconstruction and size checks") {
  const auto m = companion(kFibonacci);
  const auto fm = to_floating(m);
  const auto b = coeffs_recurrence(to_floating(char_poly(m)), 30);
  const auto direct = matrix_power_via_coeffs(fm, b);
  const auto mixed = matrix_power_via_coeffs(m, b);
  const auto exact = matrix_power_binary(m, 30);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(direct(i, j) == exact(i, j).get_d());
      CHECK(mixed(i, j) == exact(i, j).get_d());
    }
  }
  CHECK_THROWS_AS(matrix_power_via_coeffs(companion(kQuartic), coeffs_recurrence(exact_poly(kFibonacci), 5)),
                  ConsistencyError);
  CHECK_THROWS_AS(matrix_power_via_coeffs(companion(kQuartic), b), ConsistencyError);
}

TEST_CASE("method names") {
  for (Method m : {Method::recurrence, Method::closedform, Method::contour, Method::asymptotic, Method::binary}) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK(method_name(Method::closedform) == "closedform");
  CHECK_THROWS_AS(parse_method("laplace"), InvalidInputError);
}

TEST_CASE("route comparison") {
  const auto all = std::vector<Method>{Method::binary, Method::asymptotic, Method::contour, Method::closedform,
                                       Method::recurrence};

  const auto fib = compare_methods(kFib, 30, {Method::recurrence});
  CHECK(fib.n == 30);
  CHECK(fib.dim == 2);
  REQUIRE(fib.routes.size() == 1);
  const auto* rec = fib.find(Method::recurrence);
  REQUIRE(rec != nullptr);
  CHECK(rec->ok());
  CHECK(rec->deviation.exact_match);
  CHECK(rec->deviation.max_abs == 0.0);
  CHECK(*rec->native == matrix_power_binary(kFib, 30));
  CHECK(fib.find(Method::contour) == nullptr);

  // Characteristic polynomial (x - 2)^2 (x - 3), not in companion form.
  const QMatrix ex1 = rows({{2, 1, 0}, {0, 2, 0}, {1, 1, 3}});
  REQUIRE(char_poly(ex1) == exact_poly(kDoubleTwo));
  const auto rep = compare_methods(ex1, 20, all);
  REQUIRE(rep.routes.size() == 5);
  CHECK(rep.routes[0].method == Method::recurrence);
  CHECK(rep.routes[4].method == Method::binary);
  CHECK(rep.find(Method::recurrence)->deviation.exact_match);
  CHECK(rep.find(Method::binary)->deviation.exact_match);
  const auto* asym = rep.find(Method::asymptotic);
  REQUIRE(asym->ok());
  REQUIRE(asym->floating.has_value());
  // Deviation measured against the size of A^n.
  double scale = 0.0;
  for (const Rational& v : rep.oracle.entries()) scale = std::max(scale, std::abs(v.get_d()));
  CHECK(asym->deviation.max_abs / scale <= 0.01);
  CHECK(asym->deviation.max_abs > 0.0);
  const auto* closed = rep.find(Method::closedform);
  CHECK_FALSE(closed->ok());
  CHECK(closed->error->find("repeated") != std::string::npos);
  CHECK_FALSE(closed->floating.has_value());

  const auto c15 = compare_methods(companion(kQuartic), 15, {Method::contour}, QuadratureConfig{4.0, 4096});
  const auto* ct = c15.find(Method::contour);
  REQUIRE(ct->ok());
  CHECK(ct->deviation.max_rel <= 1e-6);

  const auto d = compare_methods(companion(kQuintic4), 25, {Method::closedform, Method::contour});
  CHECK(d.find(Method::closedform)->deviation.max_rel <= 1e-9);
  CHECK(d.find(Method::contour)->deviation.max_rel <= 1e-6);

  const auto narrow = compare_methods(companion(kDoubleTwo), 10, {Method::contour}, QuadratureConfig{2.0, 64});
  CHECK_FALSE(narrow.find(Method::contour)->ok());

  CHECK_THROWS_AS(compare_methods(kFib, 1, {Method::recurrence}), RangeError);

  const auto fl = compare_methods(to_floating(companion(kFibonacci)), 40, {Method::recurrence, Method::closedform});
  CHECK(fl.find(Method::recurrence)->deviation.max_rel <= 1e-12);
  CHECK(fl.find(Method::closedform)->deviation.max_rel <= 1e-9);
}
