#pragma once

#include "matpow/contour.hpp"
#include "matpow/matrix.hpp"
#include "matpow/recurrence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matpow {

enum class Method { recurrence, closedform, contour, asymptotic, binary };

std::string_view method_name(Method method);
/// Inverse of method_name; unknown names raise InvalidInputError.
Method parse_method(std::string_view name);

/// sum_j b_j(n) M^j with M^0..M^{k-1} built by repeated multiplication.
template <Scalar T>
SquareMatrix<T> matrix_power_via_coeffs(const SquareMatrix<T>& m, const CoeffVector<T>& coeffs);

/// Floating coefficients applied to an exact matrix (converted to double).
SquareMatrix<double> matrix_power_via_coeffs(const SquareMatrix<Rational>& m,
                                             const CoeffVector<double>& coeffs);

/// Repeated squaring; n = 0 gives the identity.
template <Scalar T>
SquareMatrix<T> matrix_power_binary(const SquareMatrix<T>& m, long n);

struct Deviation {
  double max_abs = 0.0;
  /// max |entry - oracle| / max(1, |oracle|)
  double max_rel = 0.0;
  /// Entry-wise equality in the input flavor.
  bool exact_match = false;
};

template <Scalar T>
struct RouteResult {
  Method method = Method::recurrence;
  /// Set for routes computed in the input flavor (recurrence, binary).
  std::optional<SquareMatrix<T>> native;
  /// Set for the floating routes (closedform, contour, asymptotic).
  std::optional<SquareMatrix<double>> floating;
  Deviation deviation;
  std::int64_t coeff_ns = 0;
  std::int64_t reconstruct_ns = 0;
  /// Route failure message; the other fields are then unset.
  std::optional<std::string> error;

  bool ok() const noexcept { return !error.has_value(); }
};

template <Scalar T>
struct PowerReport {
  long n = 0;
  std::size_t dim = 0;
  SquareMatrix<T> oracle;
  std::int64_t oracle_ns = 0;
  /// In fixed route order recurrence, closedform, contour, asymptotic, binary.
  std::vector<RouteResult<T>> routes;

  const RouteResult<T>* find(Method method) const;
};

/// Runs each requested route, reconstructs A^n and compares it to the binary
/// oracle. Route failures are recorded in their entry; n < k raises
/// RangeError. cfg defaults to default_quadrature of the computed roots.
template <Scalar T>
PowerReport<T> compare_methods(const SquareMatrix<T>& m, long n, const std::vector<Method>& routes,
                               const std::optional<QuadratureConfig>& cfg = std::nullopt);

}  // namespace matpow
