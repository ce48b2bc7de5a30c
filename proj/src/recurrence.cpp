#include "matpow/recurrence.hpp"

#include "matpow/error.hpp"

#include <cmath>
#include <string>

namespace matpow {

namespace {

void require_n(std::size_t k, long n) {
  if (n < static_cast<long>(k)) {
    throw RangeError("b_j(n) is defined for n >= k; got n = " + std::to_string(n) +
                     ", k = " + std::to_string(k));
  }
}

/// One step of b_j <- b_{j-1} - a_j b_{k-1}, divided by `divisor`.
template <Scalar T>
void step(std::vector<T>& b, const std::vector<T>& a, const T* divisor) {
  const std::size_t k = b.size();
  const T last = b[k - 1];
  T tmp;
  for (std::size_t j = k; j-- > 0;) {
    tmp = a[j] * last;
    if (j > 0) {
      b[j] = b[j - 1] - tmp;
    } else {
      b[j] = -tmp;
    }
    if (divisor) b[j] /= *divisor;
  }
}

}  // namespace

template <Scalar T>
CoeffStream<T>::CoeffStream(const Polynomial<T>& p) : a_(p.low_coeffs().begin(), p.low_coeffs().end()) {
  current_.n = static_cast<long>(a_.size());
  current_.values.reserve(a_.size());
  for (const T& a : a_) current_.values.push_back(T(-a));
}

template <Scalar T>
void CoeffStream<T>::advance() {
  step<T>(current_.values, a_, nullptr);
  ++current_.n;
}

template <Scalar T>
CoeffVector<T> coeffs_recurrence(const Polynomial<T>& p, long n) {
  require_n(p.degree(), n);
  CoeffStream<T> stream(p);
  while (stream.current().n < n) stream.advance();
  return stream.current();
}

CoeffVector<double> coeffs_recurrence_scaled(const Polynomial<double>& p, long n, double scale) {
  require_n(p.degree(), n);
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidInputError("scale must be positive and finite");
  const std::vector<double> a(p.low_coeffs().begin(), p.low_coeffs().end());
  const long k = static_cast<long>(a.size());
  // Start from b_j(k) / scale^k so every stored vector is b_j(m) / scale^m.
  const double first = std::pow(scale, static_cast<double>(k));
  CoeffVector<double> out;
  out.values.reserve(a.size());
  for (double aj : a) out.values.push_back(-aj / first);
  for (long m = k; m < n; ++m) step<double>(out.values, a, &scale);
  out.n = n;
  out.log_scale = static_cast<double>(n) * std::log(scale);
  return out;
}

template <Scalar T>
void for_each_coeffs(const Polynomial<T>& p, long n_max,
                     const std::function<void(const CoeffVector<T>&)>& visit) {
  require_n(p.degree(), n_max);
  CoeffStream<T> stream(p);
  visit(stream.current());
  while (stream.current().n < n_max) {
    stream.advance();
    visit(stream.current());
  }
}

template <Scalar T>
std::vector<CoeffVector<T>> coeffs_sequence(const Polynomial<T>& p, long n_max) {
  std::vector<CoeffVector<T>> out;
  for_each_coeffs<T>(p, n_max, [&](const CoeffVector<T>& c) { out.push_back(c); });
  return out;
}

template class CoeffStream<Rational>;
template class CoeffStream<double>;
template CoeffVector<Rational> coeffs_recurrence(const Polynomial<Rational>&, long);
template CoeffVector<double> coeffs_recurrence(const Polynomial<double>&, long);
template void for_each_coeffs(const Polynomial<Rational>&, long,
                              const std::function<void(const CoeffVector<Rational>&)>&);
template void for_each_coeffs(const Polynomial<double>&, long,
                              const std::function<void(const CoeffVector<double>&)>&);
template std::vector<CoeffVector<Rational>> coeffs_sequence(const Polynomial<Rational>&, long);
template std::vector<CoeffVector<double>> coeffs_sequence(const Polynomial<double>&, long);

}  // namespace matpow
