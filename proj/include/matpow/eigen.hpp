#pragma once

#include "matpow/polynomial.hpp"
#include "matpow/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace matpow {

inline constexpr double kDefaultClusterTol = 1e-6;
inline constexpr double kDefaultDomTol = 1e-9;
inline constexpr int kRootIterationCap = 500;

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// Roots of a characteristic polynomial, clustered by multiplicity.
///
/// Roots are ordered by decreasing modulus, then increasing real part, then
/// decreasing imaginary part. Conjugate pairs are stored as exact conjugates.
struct EigenStructure {
  std::vector<Root> roots;
  double spectral_radius = 0.0;
  std::size_t source_degree = 0;
  /// Non-fatal findings, e.g. a cluster whose derivative residuals disagree
  /// with its multiplicity.
  std::vector<std::string> diagnostics;

  bool all_simple() const;
};

/// All roots of P via Aberth-Ehrlich simultaneous iteration, then clustered:
/// approximations within cluster_tol * max(1, rho) of each other merge into
/// one root whose multiplicity is the cluster size. Raises ConvergenceError
/// if any clustered root misses |P(lambda)| <= 1e-10 * max(1, rho)^k.
EigenStructure find_roots(const Polynomial<double>& p, double cluster_tol = kDefaultClusterTol);

double spectral_radius(const EigenStructure& e);

/// Roots with |lambda| >= rho * (1 - dom_tol). Never empty for a valid E.
std::vector<Root> dominant_set(const EigenStructure& e, double dom_tol = kDefaultDomTol);

}  // namespace matpow
