#pragma once

/**
 * @file asymptotic.hpp
 * @brief Leading-order behaviour of b_j(n) from the eigenvalues on the
 *        spectral circle.
 *
 * Each dominant eigenvalue lambda of multiplicity m contributes
 *
 *   factor * lambda^n * binom(n - k, m - 1),
 *   factor = -p_j(lambda) m! / (lambda^{m+j} P^{(m)}(lambda)).
 *
 * Contributions from every eigenvalue on the circle are summed; the largest
 * multiplicity sets the growth rate rho^n n^{m-1}.
 */

#include "matpow/eigen.hpp"
#include "matpow/polynomial.hpp"
#include "matpow/recurrence.hpp"

#include <cstddef>
#include <vector>

namespace matpow {

struct AsymptoticTerm {
  Complex lambda;
  int multiplicity = 1;
  Complex factor;
};

struct AsymptoticEstimate {
  std::size_t degree = 0;
  double spectral_radius = 0.0;
  /// Eigenvalues on the spectral circle that the terms were built from.
  std::vector<Root> dominant;
  /// per_j_terms[j] lists the terms for b_j.
  std::vector<std::vector<AsymptoticTerm>> per_j_terms;
  /// leading_vanished[j]: p_j vanished at every dominant eigenvalue, so the
  /// estimate for b_j is identically zero.
  std::vector<bool> leading_vanished;
};

struct EstimateOptions {
  double dom_tol = kDefaultDomTol;
  /// Keep only the terms of greatest multiplicity.
  bool leading_only = false;
};

AsymptoticEstimate build_estimate(const EigenStructure& e, const Polynomial<double>& p,
                                  const EstimateOptions& options = {});

/// Sum of the terms at n (n >= k), real part after conjugate cancellation.
CoeffVector<double> eval_estimate(const AsymptoticEstimate& est, long n);

struct GrowthClass {
  double rho = 0.0;
  int max_multiplicity = 0;
};

/// b_j(n) grows like rho^n n^{max_multiplicity - 1}.
GrowthClass dominant_growth_class(const AsymptoticEstimate& est);

/// One real contribution
///   modulus^n [cos_coeff cos(theta n) + sin_coeff sin(theta n)] binom(n-k, m-1)
/// obtained by merging a conjugate pair (or a lone real eigenvalue, theta = 0
/// or pi).
struct RealTerm {
  double modulus = 0.0;
  double theta = 0.0;
  int multiplicity = 1;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

std::vector<RealTerm> real_form(const AsymptoticEstimate& est, std::size_t j);

}  // namespace matpow
