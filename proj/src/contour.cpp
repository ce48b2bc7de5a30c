#include "matpow/contour.hpp"

#include "matpow/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace matpow {

namespace {

constexpr double kNearPole = 1e-12;
constexpr double kImagTolerance = 1e-6;
// Computed roots carry rounding, so R must clear rho by a relative margin.
constexpr double kRadiusMargin = 1e-9;

}  // namespace

QuadratureConfig default_quadrature(const EigenStructure& e) {
  return {1.25 * e.spectral_radius + 0.5, kDefaultNodes};
}

CoeffVector<double> coeffs_contour(const Polynomial<double>& p, long n, const QuadratureConfig& cfg,
                                   const EigenStructure& e) {
  const long k = static_cast<long>(p.degree());
  if (e.source_degree != p.degree()) {
    throw ConsistencyError("eigen structure degree does not match the polynomial");
  }
  if (cfg.nodes < 16 || cfg.nodes % 2 != 0) {
    throw InvalidInputError("quadrature needs an even node count >= 16; got " + std::to_string(cfg.nodes));
  }
  if (!std::isfinite(cfg.radius) || !(cfg.radius > 0.0)) {
    throw InvalidInputError("contour radius must be positive and finite");
  }
  if (n < k) throw RangeError("b_j(n) is defined for n >= k; got n = " + std::to_string(n));
  if (n >= cfg.nodes) {
    throw RangeError("node count " + std::to_string(cfg.nodes) + " must exceed n = " + std::to_string(n) +
                     " to resolve the integrand frequency");
  }
  const double rho = spectral_radius(e);
  if (!(cfg.radius > rho * (1.0 + kRadiusMargin))) {
    std::ostringstream msg;
    msg << "contour radius " << cfg.radius << " must exceed the spectral radius " << rho;
    throw ContourViolationError(msg.str());
  }

  const long nodes = cfg.nodes;
  const double radius = cfg.radius;
  std::vector<Complex> unit(static_cast<std::size_t>(nodes));
  for (long q = 0; q < nodes; ++q) {
    unit[static_cast<std::size_t>(q)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(nodes));
  }
  std::vector<double> radius_pow(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) radius_pow[static_cast<std::size_t>(j)] = std::pow(radius, static_cast<double>(j));

  std::vector<Complex> sums(static_cast<std::size_t>(k), Complex(0.0, 0.0));
  std::vector<double> abs_sums(static_cast<std::size_t>(k), 0.0);
  const auto low = p.low_coeffs();
  for (long m = 0; m < nodes; ++m) {
    const Complex s = radius * unit[static_cast<std::size_t>(m)];
    const Complex ps = eval_poly(p, s);
    if (std::abs(ps) < kNearPole) {
      std::ostringstream msg;
      msg << "|P(s)| = " << std::abs(ps) << " at node " << m << "; choose a larger radius";
      throw NearPoleError(msg.str());
    }
    Complex prefix(0.0, 0.0);
    for (long j = 0; j < k; ++j) {
      const Complex s_pow = radius_pow[static_cast<std::size_t>(j)] * unit[static_cast<std::size_t>((m * j) % nodes)];
      prefix += low[static_cast<std::size_t>(j)] * s_pow;
      const Complex phase = unit[static_cast<std::size_t>((m * (n - j)) % nodes)];
      const Complex f = phase * prefix / ps;
      sums[static_cast<std::size_t>(j)] += f;
      abs_sums[static_cast<std::size_t>(j)] += std::abs(f);
    }
  }

  const double log_max = std::log(std::numeric_limits<double>::max());
  CoeffVector<double> out;
  out.n = n;
  out.values.resize(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    const Complex mean = sums[static_cast<std::size_t>(j)] / static_cast<double>(nodes);
    const double mean_abs = abs_sums[static_cast<std::size_t>(j)] / static_cast<double>(nodes);
    if (std::abs(mean.imag()) > kImagTolerance * mean_abs) {
      std::ostringstream msg;
      msg << "contour b_" << j << "(" << n << ") has imaginary residual " << mean.imag()
          << " against integrand scale " << mean_abs;
      throw AccuracyError(msg.str());
    }
    if (mean.real() == 0.0) {
      out.values[static_cast<std::size_t>(j)] = 0.0;
      continue;
    }
    const double log_mag = std::log(std::abs(mean.real())) + static_cast<double>(n - j) * std::log(radius);
    if (log_mag > log_max) {
      throw RepresentableRangeError("contour b_" + std::to_string(j) + "(" + std::to_string(n) +
                                    ") exceeds the double range");
    }
    out.values[static_cast<std::size_t>(j)] = -std::copysign(std::exp(log_mag), mean.real());
  }
  return out;
}

}  // namespace matpow
