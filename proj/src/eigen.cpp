#include "matpow/eigen.hpp"

#include "matpow/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace matpow {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
  Complex value;
  Complex derivative;
  /// Rounding bound for the computed value: sum |c_l| |z|^l * 2 deg eps.
  double error_bound;
};

HornerResult horner(std::span<const double> coeffs, Complex z) {
  Complex value(0.0, 0.0);
  Complex derivative(0.0, 0.0);
  double bound = 0.0;
  const double r = std::abs(z);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    derivative = derivative * z + value;
    value = value * z + *it;
    bound = bound * r + std::abs(*it);
  }
  return {value, derivative, bound * 2.0 * static_cast<double>(coeffs.size()) * kEps};
}

std::vector<Complex> aberth(std::span<const double> coeffs, double& best_residual) {
  const std::size_t k = coeffs.size() - 1;
  double max_low = 0.0;
  for (std::size_t j = 0; j < k; ++j) max_low = std::max(max_low, std::abs(coeffs[j]));
  const double radius = 1.0 + max_low;

  std::vector<Complex> z(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k) + 0.4;
    z[i] = std::polar(radius, angle);
  }

  std::vector<bool> done(k, false);
  for (int iter = 0; iter < kRootIterationCap; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (done[i]) continue;
      const HornerResult h = horner(coeffs, z[i]);
      if (std::abs(h.value) <= h.error_bound) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = h.value / h.derivative;
      Complex repulsion(0.0, 0.0);
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        // Derivative vanished exactly; nudge off the critical point.
        step = Complex(1e-8 * radius, 1e-8 * radius);
      }
      z[i] -= step;
      if (std::abs(step) <= 4.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }

  best_residual = 0.0;
  for (const Complex& zi : z) best_residual = std::max(best_residual, std::abs(horner(coeffs, zi).value));
  return z;
}

std::vector<double> derivative_coeffs(std::span<const double> coeffs, unsigned m) {
  DensePolynomial<double> d = derivative_m(DensePolynomial<double>(std::vector<double>(coeffs.begin(), coeffs.end())), m);
  return {d.coeffs().begin(), d.coeffs().end()};
}

/// Newton on P^{(m-1)}, whose root at an m-fold cluster is simple. Stops once
/// the steps stop shrinking.
Complex refine_cluster(std::span<const double> coeffs, Complex start, int multiplicity, double radius_limit) {
  const std::vector<double> d = derivative_coeffs(coeffs, static_cast<unsigned>(multiplicity - 1));
  if (d.size() < 2) return start;
  Complex z = start;
  double last_step = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 50; ++iter) {
    const HornerResult h = horner(d, z);
    if (std::abs(h.derivative) == 0.0) break;
    const Complex step = h.value / h.derivative;
    if (!(std::abs(step) < last_step)) break;
    last_step = std::abs(step);
    z -= step;
    if (std::abs(step) <= 2.0 * kEps * std::abs(z)) break;
  }
  return std::abs(z - start) <= radius_limit ? z : start;
}

bool root_order(const Root& lhs, const Root& rhs) {
  const double ml = std::abs(lhs.value);
  const double mr = std::abs(rhs.value);
  if (ml != mr) return ml > mr;
  if (lhs.value.real() != rhs.value.real()) return lhs.value.real() < rhs.value.real();
  return lhs.value.imag() > rhs.value.imag();
}

}  // namespace

bool EigenStructure::all_simple() const {
  return std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.multiplicity == 1; });
}

EigenStructure find_roots(const Polynomial<double>& p, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw InvalidInputError("cluster tolerance must be positive");
  const std::size_t k = p.degree();
  std::vector<double> coeffs(p.low_coeffs().begin(), p.low_coeffs().end());
  coeffs.push_back(1.0);

  double raw_residual = 0.0;
  const std::vector<Complex> approx = aberth(coeffs, raw_residual);

  double raw_rho = 0.0;
  for (const Complex& z : approx) raw_rho = std::max(raw_rho, std::abs(z));
  const double scale = std::max(1.0, raw_rho);
  const double tol = cluster_tol * scale;

  // Transitive merge of approximations closer than tol.
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (std::abs(approx[i] - approx[j]) <= tol) parent[find(i)] = find(j);
    }
  }

  EigenStructure out;
  out.source_degree = k;
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t r = find(i);
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
    seen.push_back(r);
    Complex sum(0.0, 0.0);
    int count = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (find(j) == r) {
        sum += approx[j];
        ++count;
      }
    }
    Complex mean = sum / static_cast<double>(count);
    mean = refine_cluster(coeffs, mean, count, tol);
    out.roots.push_back({mean, count});
  }

  // Real coefficients: snap near-real roots and make conjugate pairs exact.
  for (Root& r : out.roots) {
    if (std::abs(r.value.imag()) <= 0.5 * tol) r.value = Complex(r.value.real(), 0.0);
  }
  std::vector<bool> paired(out.roots.size(), false);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    if (paired[i] || out.roots[i].value.imag() <= 0.0) continue;
    const Complex target = std::conj(out.roots[i].value);
    std::size_t best = out.roots.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < out.roots.size(); ++j) {
      if (paired[j] || out.roots[j].value.imag() >= 0.0) continue;
      const double dist = std::abs(out.roots[j].value - target);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == out.roots.size()) {
      out.diagnostics.push_back("complex root without a conjugate partner");
      continue;
    }
    if (out.roots[best].multiplicity != out.roots[i].multiplicity) {
      out.diagnostics.push_back("conjugate roots have different cluster sizes");
    }
    const Complex avg = 0.5 * (out.roots[i].value + std::conj(out.roots[best].value));
    out.roots[i].value = avg;
    out.roots[best].value = std::conj(avg);
    paired[i] = paired[best] = true;
  }

  std::sort(out.roots.begin(), out.roots.end(), root_order);
  out.spectral_radius = 0.0;
  for (const Root& r : out.roots) out.spectral_radius = std::max(out.spectral_radius, std::abs(r.value));

  // Residual target, then the multiplicity cross-check on P', ..., P^{(m-1)}.
  const double target = 1e-10 * std::pow(std::max(1.0, out.spectral_radius), static_cast<double>(k));
  double worst = 0.0;
  for (const Root& r : out.roots) worst = std::max(worst, std::abs(horner(coeffs, r.value).value));
  if (!(worst <= target)) {
    std::ostringstream msg;
    msg << "root iteration did not converge after " << kRootIterationCap
        << " iterations (best residual " << worst << ", target " << target << ")";
    throw ConvergenceError(msg.str(), std::min(worst, raw_residual));
  }
  for (const Root& r : out.roots) {
    for (int d = 1; d < r.multiplicity; ++d) {
      const HornerResult h = horner(derivative_coeffs(coeffs, static_cast<unsigned>(d)), r.value);
      const double size = h.error_bound / (2.0 * static_cast<double>(k) * kEps);
      if (std::abs(h.value) > 1e-6 * std::max(1.0, size)) {
        std::ostringstream msg;
        msg << "cluster at " << r.value << " with multiplicity " << r.multiplicity
            << " has derivative " << d << " residual " << std::abs(h.value);
        out.diagnostics.push_back(msg.str());
      }
    }
  }
  return out;
}

double spectral_radius(const EigenStructure& e) {
  double rho = 0.0;
  for (const Root& r : e.roots) rho = std::max(rho, std::abs(r.value));
  return rho;
}

std::vector<Root> dominant_set(const EigenStructure& e, double dom_tol) {
  const double rho = spectral_radius(e);
  std::vector<Root> out;
  for (const Root& r : e.roots) {
    if (std::abs(r.value) >= rho * (1.0 - dom_tol)) out.push_back(r);
  }
  return out;
}

}  // namespace matpow
