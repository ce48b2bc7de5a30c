#pragma once

#include "matpow/polynomial.hpp"
#include "matpow/scalar.hpp"

#include <functional>
#include <vector>

namespace matpow {

/// b_0(n)..b_{k-1}(n) with A^n = sum_j b_j(n) A^j.
///
/// Floating vectors produced in scaled mode hold b_j(n) * exp(-log_scale);
/// everywhere else log_scale is zero.
template <Scalar T>
struct CoeffVector {
  long n = 0;
  std::vector<T> values;
  double log_scale = 0.0;

  static constexpr Flavor flavor = flavor_of<T>;

  std::size_t size() const noexcept { return values.size(); }
  const T& operator[](std::size_t j) const { return values[j]; }
};

/// Forward iterator over the recurrence
///   b_j(k) = -a_j,  b_j(n+1) = b_{j-1}(n) - a_j b_{k-1}(n),  b_{-1} = 0.
/// Holds only the current vector.
template <Scalar T>
class CoeffStream {
 public:
  explicit CoeffStream(const Polynomial<T>& p);

  const CoeffVector<T>& current() const noexcept { return current_; }
  void advance();

 private:
  std::vector<T> a_;
  CoeffVector<T> current_;
};

/// Exact (or plain floating) b_j(n). n < k raises RangeError.
template <Scalar T>
CoeffVector<T> coeffs_recurrence(const Polynomial<T>& p, long n);

/// Floating recurrence on b_j(n) / scale^n, so large n stays representable.
/// The result carries log_scale = n * log(scale).
CoeffVector<double> coeffs_recurrence_scaled(const Polynomial<double>& p, long n, double scale);

/// Calls visit for n = k..n_max in order, one forward pass.
template <Scalar T>
void for_each_coeffs(const Polynomial<T>& p, long n_max,
                     const std::function<void(const CoeffVector<T>&)>& visit);

template <Scalar T>
std::vector<CoeffVector<T>> coeffs_sequence(const Polynomial<T>& p, long n_max);

}  // namespace matpow
