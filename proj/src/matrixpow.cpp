#include "matpow/matrixpow.hpp"

#include "matpow/asymptotic.hpp"
#include "matpow/closedform.hpp"
#include "matpow/eigen.hpp"
#include "matpow/error.hpp"
#include "matpow/polynomial.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <string>

namespace matpow {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

template <Scalar T, Scalar C>
SquareMatrix<T> combine(const SquareMatrix<T>& m, const CoeffVector<C>& coeffs) {
  if (coeffs.size() != m.dim()) {
    throw ConsistencyError("coefficient vector has " + std::to_string(coeffs.size()) +
                           " entries for a matrix of dimension " + std::to_string(m.dim()));
  }
  const std::size_t k = m.dim();
  SquareMatrix<T> power = SquareMatrix<T>::identity(k);
  SquareMatrix<T> result(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (j > 0) power = power * m;
    result += T(coeffs[j]) * power;
  }
  return result;
}

template <Scalar T>
Deviation deviation_of(const SquareMatrix<T>& value, const SquareMatrix<T>& oracle) {
  Deviation d;
  d.exact_match = value == oracle;
  T diff;
  for (std::size_t i = 0; i < oracle.entries().size(); ++i) {
    diff = value.entries()[i] - oracle.entries()[i];
    const double abs_diff = to_double(magnitude(diff));
    const double ref = std::max(1.0, to_double(magnitude(oracle.entries()[i])));
    d.max_abs = std::max(d.max_abs, abs_diff);
    d.max_rel = std::max(d.max_rel, abs_diff / ref);
  }
  return d;
}

Deviation deviation_of(const SquareMatrix<double>& value, const SquareMatrix<Rational>& oracle) {
  Deviation d;
  d.exact_match = false;
  for (std::size_t i = 0; i < oracle.entries().size(); ++i) {
    const Rational exact_value = exact_from_double(value.entries()[i]);
    const Rational diff = exact_value - oracle.entries()[i];
    const double abs_diff = to_double(magnitude(diff));
    const double ref = std::max(1.0, to_double(magnitude(oracle.entries()[i])));
    d.max_abs = std::max(d.max_abs, abs_diff);
    d.max_rel = std::max(d.max_rel, abs_diff / ref);
  }
  d.exact_match = d.max_abs == 0.0;
  return d;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::recurrence: return "recurrence";
    case Method::closedform: return "closedform";
    case Method::contour: return "contour";
    case Method::asymptotic: return "asymptotic";
    case Method::binary: return "binary";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::recurrence, Method::closedform, Method::contour, Method::asymptotic, Method::binary}) {
    if (method_name(m) == name) return m;
  }
  throw InvalidInputError("unknown method \"" + std::string(name) + "\"");
}

template <Scalar T>
SquareMatrix<T> matrix_power_via_coeffs(const SquareMatrix<T>& m, const CoeffVector<T>& coeffs) {
  return combine<T, T>(m, coeffs);
}

SquareMatrix<double> matrix_power_via_coeffs(const SquareMatrix<Rational>& m, const CoeffVector<double>& coeffs) {
  return combine<double, double>(to_floating(m), coeffs);
}

template <Scalar T>
SquareMatrix<T> matrix_power_binary(const SquareMatrix<T>& m, long n) {
  if (n < 0) throw RangeError("negative exponent");
  SquareMatrix<T> result = SquareMatrix<T>::identity(m.dim());
  SquareMatrix<T> base = m;
  auto remaining = static_cast<unsigned long>(n);
  while (remaining > 0) {
    if (remaining & 1UL) result = result * base;
    remaining >>= 1;
    if (remaining > 0) base = base * base;
  }
  return result;
}

template <Scalar T>
const RouteResult<T>* PowerReport<T>::find(Method method) const {
  for (const auto& r : routes) {
    if (r.method == method) return &r;
  }
  return nullptr;
}

template <Scalar T>
PowerReport<T> compare_methods(const SquareMatrix<T>& m, long n, const std::vector<Method>& routes,
                               const std::optional<QuadratureConfig>& cfg) {
  const long k = static_cast<long>(m.dim());
  if (n < k) throw RangeError("compare_methods needs n >= k; got n = " + std::to_string(n));

  auto start = Clock::now();
  PowerReport<T> report{n, m.dim(), matrix_power_binary(m, n), 0, {}};
  report.oracle_ns = elapsed_ns(start);

  const Polynomial<T> p = char_poly(m);
  const Polynomial<double> pf = to_floating(p);
  // Roots are found once, on first use by a floating route.
  std::optional<EigenStructure> roots;
  std::exception_ptr roots_error;
  auto eigen = [&]() -> const EigenStructure& {
    if (!roots && !roots_error) {
      try {
        roots = find_roots(pf);
      } catch (const Error&) {
        roots_error = std::current_exception();
      }
    }
    if (roots_error) std::rethrow_exception(roots_error);
    return *roots;
  };

  constexpr std::array order{Method::recurrence, Method::closedform, Method::contour, Method::asymptotic,
                             Method::binary};
  for (Method method : order) {
    if (std::find(routes.begin(), routes.end(), method) == routes.end()) continue;
    RouteResult<T> r;
    r.method = method;
    try {
      if (method == Method::recurrence || method == Method::binary) {
        start = Clock::now();
        if (method == Method::recurrence) {
          const CoeffVector<T> b = coeffs_recurrence(p, n);
          r.coeff_ns = elapsed_ns(start);
          start = Clock::now();
          r.native = matrix_power_via_coeffs(m, b);
        } else {
          r.native = matrix_power_binary(m, n);
        }
        r.reconstruct_ns = elapsed_ns(start);
        r.deviation = deviation_of(*r.native, report.oracle);
      } else {
        start = Clock::now();
        const EigenStructure& e = eigen();
        CoeffVector<double> b;
        if (method == Method::closedform) {
          b = coeffs_closed_distinct(e, pf, n);
        } else if (method == Method::contour) {
          b = coeffs_contour(pf, n, cfg.value_or(default_quadrature(e)), e);
        } else {
          b = eval_estimate(build_estimate(e, pf), n);
        }
        r.coeff_ns = elapsed_ns(start);
        start = Clock::now();
        r.floating = matrix_power_via_coeffs(m, b);
        r.reconstruct_ns = elapsed_ns(start);
        r.deviation = deviation_of(*r.floating, report.oracle);
      }
    } catch (const Error& ex) {
      r.native.reset();
      r.floating.reset();
      r.error = ex.what();
    }
    report.routes.push_back(std::move(r));
  }
  return report;
}

template SquareMatrix<Rational> matrix_power_via_coeffs(const SquareMatrix<Rational>&, const CoeffVector<Rational>&);
template SquareMatrix<double> matrix_power_via_coeffs(const SquareMatrix<double>&, const CoeffVector<double>&);
template SquareMatrix<Rational> matrix_power_binary(const SquareMatrix<Rational>&, long);
template SquareMatrix<double> matrix_power_binary(const SquareMatrix<double>&, long);
template struct PowerReport<Rational>;
template struct PowerReport<double>;
template PowerReport<Rational> compare_methods(const SquareMatrix<Rational>&, long, const std::vector<Method>&,
                                               const std::optional<QuadratureConfig>&);
template PowerReport<double> compare_methods(const SquareMatrix<double>&, long, const std::vector<Method>&,
                                             const std::optional<QuadratureConfig>&);

}  // namespace matpow
