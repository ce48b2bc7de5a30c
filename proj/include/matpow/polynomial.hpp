#pragma once

/**
 * @file polynomial.hpp
 * @brief Monic characteristic polynomials and the helper polynomials built
 *        from them.
 *
 * A Polynomial stores only a_0..a_{k-1}; the leading coefficient is always 1:
 *
 *   P(x) = x^k + a_{k-1} x^{k-1} + ... + a_1 x + a_0
 *
 * Derivatives and the prefix polynomials p_j(x) = a_0 + a_1 x + ... + a_j x^j
 * are not monic, so they come back as DensePolynomial with an explicit
 * leading coefficient.
 */

#include "matpow/matrix.hpp"
#include "matpow/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace matpow {

template <Scalar T>
class Polynomial {
 public:
  /// Empty or non-finite coefficient lists raise InvalidInputError.
  explicit Polynomial(std::vector<T> low_coeffs);

  std::size_t degree() const noexcept { return low_.size(); }
  std::span<const T> low_coeffs() const noexcept { return low_; }
  const T& operator[](std::size_t j) const { return low_[j]; }

  bool operator==(const Polynomial& other) const = default;

 private:
  std::vector<T> low_;
};

/// Polynomial with explicit coefficients c_0..c_d. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
template <Scalar T>
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<T> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const T> coeffs() const noexcept { return coeffs_; }

  /// Horner, highest degree first.
  T operator()(const T& s) const;
  Complex operator()(Complex s) const;

  bool operator==(const DensePolynomial& other) const = default;

 private:
  std::vector<T> coeffs_;
};

template <Scalar T>
DensePolynomial<T> to_dense(const Polynomial<T>& p);

Polynomial<double> to_floating(const Polynomial<Rational>& p);
inline Polynomial<double> to_floating(const Polynomial<double>& p) { return p; }

/// Monic characteristic polynomial det(xI - M) by the trace recursion
/// (Faddeev-LeVerrier). The exact flavor is exact. The floating flavor checks
/// the Cayley-Hamilton residual against 1e-8 * ||M||^k and raises
/// AccuracyError when it is exceeded.
template <Scalar T>
Polynomial<T> char_poly(const SquareMatrix<T>& m);

/// Largest entry of |P(M)|; zero for the exact characteristic polynomial.
template <Scalar T>
T cayley_hamilton_residual(const SquareMatrix<T>& m, const Polynomial<T>& p);

/// P(s) by Horner's rule, highest degree first.
template <Scalar T>
T eval_poly(const Polynomial<T>& p, const T& s);
template <Scalar T>
Complex eval_poly(const Polynomial<T>& p, Complex s);

/// m-fold derivative. m = 0 gives P itself, m = k the constant k!, m > k the
/// zero polynomial.
template <Scalar T>
DensePolynomial<T> derivative_m(const Polynomial<T>& p, unsigned m);
template <Scalar T>
DensePolynomial<T> derivative_m(const DensePolynomial<T>& p, unsigned m);

/// Prefix polynomial p_j(x) = sum_{l<=j} a_l x^l for -1 <= j <= k-1;
/// p_{-1} is the zero polynomial. Other j raise RangeError.
template <Scalar T>
DensePolynomial<T> partial_poly(const Polynomial<T>& p, long j);

extern template class Polynomial<Rational>;
extern template class Polynomial<double>;
extern template class DensePolynomial<Rational>;
extern template class DensePolynomial<double>;

}  // namespace matpow
