#include "matpow/closedform.hpp"

#include "matpow/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace matpow {

namespace {

constexpr double kZeroRoot = 1e-12;
constexpr double kMinDerivative = 1e-12;
constexpr double kImagTolerance = 1e-8;

void check_structure(const EigenStructure& e, const Polynomial<double>& p) {
  if (e.source_degree != p.degree()) {
    throw ConsistencyError("eigen structure degree does not match the polynomial");
  }
  if (!e.all_simple()) {
    throw UnsupportedStructureError(
        "closed form requires distinct eigenvalues; use the recurrence or asymptotic route for "
        "repeated roots");
  }
}

/// Roots in summation order: each complex root is immediately followed by its
/// conjugate so pairs are accumulated together. Zero roots are dropped; their
/// terms carry p_j(0) = a_0 = 0.
std::vector<std::vector<Complex>> summation_groups(const EigenStructure& e) {
  const double zero = kZeroRoot * std::max(1.0, e.spectral_radius);
  std::vector<bool> used(e.roots.size(), false);
  std::vector<std::vector<Complex>> groups;
  for (std::size_t i = 0; i < e.roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex lambda = e.roots[i].value;
    if (std::abs(lambda) <= zero) continue;
    std::vector<Complex> group{lambda};
    if (lambda.imag() != 0.0) {
      for (std::size_t j = i + 1; j < e.roots.size(); ++j) {
        if (!used[j] && e.roots[j].value == std::conj(lambda)) {
          used[j] = true;
          group.push_back(e.roots[j].value);
          break;
        }
      }
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

Complex derivative_at(const DensePolynomial<double>& dp, Complex lambda) {
  const Complex d = dp(lambda);
  if (std::abs(d) < kMinDerivative) {
    std::ostringstream msg;
    msg << "|P'(" << lambda << ")| = " << std::abs(d) << " is below " << kMinDerivative;
    throw IllConditionedError(msg.str());
  }
  return d;
}

}  // namespace

CoeffVector<double> coeffs_closed_distinct(const EigenStructure& e, const Polynomial<double>& p,
                                           long n) {
  check_structure(e, p);
  const long k = static_cast<long>(p.degree());
  if (n < k) throw RangeError("b_j(n) is defined for n >= k; got n = " + std::to_string(n));

  const DensePolynomial<double> dp = derivative_m(p, 1);
  const auto groups = summation_groups(e);

  CoeffVector<double> out;
  out.n = n;
  out.values.resize(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    const DensePolynomial<double> pj = partial_poly(p, j);
    Complex total(0.0, 0.0);
    double scale = 0.0;
    for (const auto& group : groups) {
      Complex pair_sum(0.0, 0.0);
      for (const Complex& lambda : group) {
        const Complex term =
            ipow(lambda, static_cast<unsigned long>(n - j - 1)) * pj(lambda) / derivative_at(dp, lambda);
        pair_sum += term;
        scale += std::abs(term);
      }
      total -= pair_sum;
    }
    if (std::abs(total.imag()) > kImagTolerance * scale) {
      std::ostringstream msg;
      msg << "closed form b_" << j << "(" << n << ") has imaginary residual " << total.imag()
          << " against term scale " << scale;
      throw AccuracyError(msg.str());
    }
    out.values[static_cast<std::size_t>(j)] = total.real();
  }
  return out;
}

GenValue eval_generating_function(const EigenStructure& e, const Polynomial<double>& p, Complex z) {
  check_structure(e, p);
  const long k = static_cast<long>(p.degree());
  const DensePolynomial<double> dp = derivative_m(p, 1);
  const auto groups = summation_groups(e);

  GenValue out{z, std::vector<Complex>(static_cast<std::size_t>(k))};
  for (long j = 0; j < k; ++j) {
    const DensePolynomial<double> pj = partial_poly(p, j);
    Complex total(0.0, 0.0);
    for (const auto& group : groups) {
      Complex pair_sum(0.0, 0.0);
      for (const Complex& lambda : group) {
        pair_sum += ipow(lambda, static_cast<unsigned long>(k - j - 1)) * pj(lambda) /
                    derivative_at(dp, lambda) * std::exp(lambda * z);
      }
      total -= pair_sum;
    }
    out.values[static_cast<std::size_t>(j)] = total;
  }
  return out;
}

}  // namespace matpow
