#include "matpow/asymptotic.hpp"

#include "matpow/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace matpow {

namespace {

constexpr double kMinDerivative = 1e-12;
constexpr double kVanishing = 1e-12;
constexpr double kImagTolerance = 1e-8;

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

/// binom(top, bottom) as an exact integer product, then rounded once.
double binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0.0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return b.get_d();
}

/// Magnitude scale of p_j(lambda) before cancellation.
double prefix_scale(const DensePolynomial<double>& pj, Complex lambda) {
  double acc = 0.0;
  const double r = std::abs(lambda);
  const auto c = pj.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

}  // namespace

AsymptoticEstimate build_estimate(const EigenStructure& e, const Polynomial<double>& p,
                                  const EstimateOptions& options) {
  if (e.source_degree != p.degree()) {
    throw ConsistencyError("eigen structure degree does not match the polynomial");
  }
  const std::size_t k = p.degree();
  AsymptoticEstimate est;
  est.degree = k;
  est.spectral_radius = spectral_radius(e);
  est.per_j_terms.resize(k);
  est.leading_vanished.assign(k, true);
  est.dominant = dominant_set(e, options.dom_tol);
  if (options.leading_only) {
    int best = 0;
    for (const Root& r : est.dominant) best = std::max(best, r.multiplicity);
    std::erase_if(est.dominant, [best](const Root& r) { return r.multiplicity != best; });
  }
  // P = x^k: every b_j(n) with n >= k is zero.
  if (est.spectral_radius == 0.0) return est;

  for (std::size_t j = 0; j < k; ++j) {
    const DensePolynomial<double> pj = partial_poly(p, static_cast<long>(j));
    for (const Root& r : est.dominant) {
      const Complex lambda = r.value;
      const int m = r.multiplicity;
      const Complex pj_val = pj(lambda);
      if (std::abs(pj_val) <= kVanishing * prefix_scale(pj, lambda)) continue;
      const Complex dm = derivative_m(p, static_cast<unsigned>(m))(lambda);
      if (std::abs(dm) < kMinDerivative) {
        std::ostringstream msg;
        msg << "|P^(" << m << ")(" << lambda << ")| = " << std::abs(dm)
            << " vanishes; the multiplicity of this cluster is inconsistent";
        throw DegenerateDerivativeError(msg.str());
      }
      const Complex factor = -pj_val * factorial(m) /
                             (ipow(lambda, static_cast<unsigned long>(m + static_cast<int>(j))) * dm);
      est.per_j_terms[j].push_back({lambda, m, factor});
    }
    est.leading_vanished[j] = est.per_j_terms[j].empty();
  }
  return est;
}

CoeffVector<double> eval_estimate(const AsymptoticEstimate& est, long n) {
  const long k = static_cast<long>(est.degree);
  if (n < k) throw RangeError("b_j(n) is defined for n >= k; got n = " + std::to_string(n));
  const double log_max = std::log(std::numeric_limits<double>::max());

  CoeffVector<double> out;
  out.n = n;
  out.values.assign(est.degree, 0.0);
  for (std::size_t j = 0; j < est.degree; ++j) {
    Complex total(0.0, 0.0);
    double scale = 0.0;
    for (const AsymptoticTerm& t : est.per_j_terms[j]) {
      const double binom = binomial(n - k, t.multiplicity - 1);
      if (binom == 0.0) continue;
      const double log_mag = static_cast<double>(n) * std::log(std::abs(t.lambda)) +
                             std::log(std::abs(t.factor)) + std::log(binom);
      if (log_mag > log_max) {
        throw RepresentableRangeError("asymptotic b_" + std::to_string(j) + "(" + std::to_string(n) +
                                      ") exceeds the double range");
      }
      Complex term;
      if (static_cast<double>(n) * std::log(std::abs(t.lambda)) < 0.9 * log_max) {
        term = t.factor * ipow(t.lambda, static_cast<unsigned long>(n)) * binom;
      } else {
        term = std::polar(std::exp(log_mag),
                          static_cast<double>(n) * std::arg(t.lambda) + std::arg(t.factor));
      }
      total += term;
      scale += std::abs(term);
    }
    if (std::abs(total.imag()) > kImagTolerance * scale) {
      std::ostringstream msg;
      msg << "asymptotic b_" << j << "(" << n << ") has imaginary residual " << total.imag()
          << " against term scale " << scale;
      throw AccuracyError(msg.str());
    }
    out.values[j] = total.real();
  }
  return out;
}

GrowthClass dominant_growth_class(const AsymptoticEstimate& est) {
  if (est.dominant.empty()) throw InvalidInputError("estimate has no dominant eigenvalues");
  GrowthClass g{est.spectral_radius, 0};
  for (const Root& r : est.dominant) g.max_multiplicity = std::max(g.max_multiplicity, r.multiplicity);
  return g;
}

std::vector<RealTerm> real_form(const AsymptoticEstimate& est, std::size_t j) {
  if (j >= est.degree) throw RangeError("coefficient index out of range");
  std::vector<RealTerm> out;
  for (const AsymptoticTerm& t : est.per_j_terms[j]) {
    const double modulus = std::abs(t.lambda);
    if (t.lambda.imag() == 0.0) {
      out.push_back({modulus, t.lambda.real() < 0.0 ? std::arg(Complex(-1.0, 0.0)) : 0.0, t.multiplicity,
                     t.factor.real(), 0.0});
    } else if (t.lambda.imag() > 0.0) {
      // f l^n + conj(f l^n) = |l|^n (2 Re f cos(theta n) - 2 Im f sin(theta n))
      out.push_back({modulus, std::arg(t.lambda), t.multiplicity, 2.0 * t.factor.real(),
                     -2.0 * t.factor.imag()});
    }
  }
  return out;
}

}  // namespace matpow
