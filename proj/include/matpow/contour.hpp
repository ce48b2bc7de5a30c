#pragma once

#include "matpow/eigen.hpp"
#include "matpow/polynomial.hpp"
#include "matpow/recurrence.hpp"

namespace matpow {

inline constexpr int kDefaultNodes = 2048;

/// Circle |s| = radius sampled at `nodes` equispaced points.
struct QuadratureConfig {
  double radius = 0.0;
  int nodes = kDefaultNodes;
};

/// R = 1.25 rho + 0.5, N = 2048. A larger R moves the circle away from the
/// poles but amplifies rounding by R^{n-j}.
QuadratureConfig default_quadrature(const EigenStructure& e);

/// Trapezoidal approximation of
///   b_j(n) = -(R^{n-j} / 2pi) int_0^{2pi} e^{i t (n-j)} p_j(R e^{it}) / P(R e^{it}) dt.
/// E is consulted only to check R > rho. Requires N >= 16, N even and n < N
/// (higher frequencies alias).
CoeffVector<double> coeffs_contour(const Polynomial<double>& p, long n, const QuadratureConfig& cfg,
                                   const EigenStructure& e);

}  // namespace matpow
