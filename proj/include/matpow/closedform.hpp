#pragma once

#include "matpow/eigen.hpp"
#include "matpow/polynomial.hpp"
#include "matpow/recurrence.hpp"

#include <vector>

namespace matpow {

/// G_0(z)..G_{k-1}(z) of the exponential generating function
/// G_j(z) = sum_{n>=0} b_j(n+k) z^n / n!.
struct GenValue {
  Complex z;
  std::vector<Complex> values;
};

/// Distinct-eigenvalue closed form
///   b_j(n) = -sum_l lambda_l^{n-j-1} p_j(lambda_l) / P'(lambda_l).
/// Repeated roots raise UnsupportedStructureError, |P'(lambda)| < 1e-12 raises
/// IllConditionedError, an imaginary residual above 1e-8 of the term scale
/// raises AccuracyError.
CoeffVector<double> coeffs_closed_distinct(const EigenStructure& e, const Polynomial<double>& p,
                                           long n);

/// G_j(z) = -sum_l lambda_l^{k-j-1} p_j(lambda_l) / P'(lambda_l) exp(lambda_l z).
GenValue eval_generating_function(const EigenStructure& e, const Polynomial<double>& p, Complex z);

}  // namespace matpow
