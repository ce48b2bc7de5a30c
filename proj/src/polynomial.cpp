#include "matpow/polynomial.hpp"

#include "matpow/error.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace matpow {

template <Scalar T>
Polynomial<T>::Polynomial(std::vector<T> low_coeffs) : low_(std::move(low_coeffs)) {
  if (low_.empty()) throw InvalidInputError("polynomial degree must be at least 1");
  for (const T& a : low_) {
    if (!is_finite(a)) throw InvalidInputError("polynomial coefficient is not finite");
  }
}

template <Scalar T>
DensePolynomial<T>::DensePolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

template <Scalar T>
T DensePolynomial<T>::operator()(const T& s) const {
  T acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

template <Scalar T>
Complex DensePolynomial<T>::operator()(Complex s) const {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + to_double(*it);
  return acc;
}

template <Scalar T>
DensePolynomial<T> to_dense(const Polynomial<T>& p) {
  std::vector<T> c(p.low_coeffs().begin(), p.low_coeffs().end());
  c.push_back(T(1));
  return DensePolynomial<T>(std::move(c));
}

Polynomial<double> to_floating(const Polynomial<Rational>& p) {
  std::vector<double> c;
  c.reserve(p.degree());
  for (const Rational& a : p.low_coeffs()) c.push_back(a.get_d());
  return Polynomial<double>(std::move(c));
}

template <Scalar T>
T cayley_hamilton_residual(const SquareMatrix<T>& m, const Polynomial<T>& p) {
  if (m.dim() != p.degree()) throw DimensionError("polynomial degree does not match matrix dimension");
  const std::size_t k = p.degree();
  const auto id = SquareMatrix<T>::identity(k);
  SquareMatrix<T> acc = id;
  for (std::size_t j = k; j-- > 0;) acc = acc * m + p[j] * id;
  return acc.max_abs();
}

template <Scalar T>
Polynomial<T> char_poly(const SquareMatrix<T>& m) {
  const std::size_t k = m.dim();
  for (const T& x : m.entries()) {
    if (!is_finite(x)) throw InvalidInputError("matrix entry is not finite");
  }
  const auto id = SquareMatrix<T>::identity(k);
  std::vector<T> a(k);
  // N_1 = I; a_{k-i} = -tr(M N_i) / i; N_{i+1} = M N_i + a_{k-i} I.
  SquareMatrix<T> n_i = id;
  for (std::size_t i = 1; i <= k; ++i) {
    SquareMatrix<T> mn = m * n_i;
    T c = mn.trace();
    c /= T(static_cast<long>(i));
    c = -c;
    a[k - i] = c;
    if (i < k) n_i = mn + c * id;
  }
  Polynomial<T> p(std::move(a));
  if constexpr (std::same_as<T, double>) {
    const double residual = cayley_hamilton_residual(m, p);
    const double threshold = 1e-8 * std::pow(m.norm_inf(), static_cast<double>(k));
    if (!(residual <= threshold)) {
      throw AccuracyError("Cayley-Hamilton residual " + std::to_string(residual) +
                          " exceeds threshold " + std::to_string(threshold));
    }
  }
  return p;
}

template <Scalar T>
T eval_poly(const Polynomial<T>& p, const T& s) {
  T acc(1);
  for (std::size_t j = p.degree(); j-- > 0;) {
    acc *= s;
    acc += p[j];
  }
  return acc;
}

template <Scalar T>
Complex eval_poly(const Polynomial<T>& p, Complex s) {
  Complex acc(1.0, 0.0);
  for (std::size_t j = p.degree(); j-- > 0;) acc = acc * s + to_double(p[j]);
  return acc;
}

template <Scalar T>
DensePolynomial<T> derivative_m(const DensePolynomial<T>& p, unsigned m) {
  const auto c = p.coeffs();
  if (m == 0) return p;
  if (m >= c.size()) return DensePolynomial<T>();
  std::vector<T> out(c.size() - m);
  for (std::size_t l = m; l < c.size(); ++l) {
    T falling(1);
    for (std::size_t r = 0; r < m; ++r) falling *= T(static_cast<long>(l - r));
    out[l - m] = c[l] * falling;
  }
  return DensePolynomial<T>(std::move(out));
}

template <Scalar T>
DensePolynomial<T> derivative_m(const Polynomial<T>& p, unsigned m) {
  return derivative_m(to_dense(p), m);
}

template <Scalar T>
DensePolynomial<T> partial_poly(const Polynomial<T>& p, long j) {
  const long k = static_cast<long>(p.degree());
  if (j < -1 || j > k - 1) {
    throw RangeError("prefix index " + std::to_string(j) + " outside [-1, " + std::to_string(k - 1) + "]");
  }
  const auto low = p.low_coeffs();
  return DensePolynomial<T>(std::vector<T>(low.begin(), low.begin() + (j + 1)));
}

template class Polynomial<Rational>;
template class Polynomial<double>;
template class DensePolynomial<Rational>;
template class DensePolynomial<double>;

#define MATPOW_INSTANTIATE(T)                                                          \
  template DensePolynomial<T> to_dense(const Polynomial<T>&);                          \
  template T cayley_hamilton_residual(const SquareMatrix<T>&, const Polynomial<T>&);   \
  template Polynomial<T> char_poly(const SquareMatrix<T>&);                            \
  template T eval_poly(const Polynomial<T>&, const T&);                                \
  template Complex eval_poly(const Polynomial<T>&, Complex);                           \
  template DensePolynomial<T> derivative_m(const DensePolynomial<T>&, unsigned);       \
  template DensePolynomial<T> derivative_m(const Polynomial<T>&, unsigned);            \
  template DensePolynomial<T> partial_poly(const Polynomial<T>&, long);

MATPOW_INSTANTIATE(Rational)
MATPOW_INSTANTIATE(double)

#undef MATPOW_INSTANTIATE

}  // namespace matpow
