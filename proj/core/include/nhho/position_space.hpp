#pragma once

// Real-space Hermite functions at an arbitrary frequency,
//   psi_n(x) = (sqrt(omega) / (sqrt(pi) 2^n n!))^(1/2) H_n(sqrt(omega) x) exp(-omega x^2 / 2),
// Gauss-Hermite quadrature, and evaluation of wavefunction series on grids.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "nhho/perturbation.hpp"

namespace nhho {

// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
double hermite_poly(std::size_t n, double y);

struct HermiteBasisFunction {
  std::size_t n = 0;
  double omega = 1.0;
};

// Normalized value, evaluated with the normalized recurrence
//   psi_{k+1} = sqrt(2/(k+1)) y psi_k - sqrt(k/(k+1)) psi_{k-1}
// so no factorial or power of two is ever formed.
double eval_basis(const HermiteBasisFunction& fn, double x);

// psi_0(x) .. psi_max_n(x) in one recurrence pass.
std::vector<double> eval_basis_all(std::size_t max_n, double omega, double x);

struct QuadratureRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // for weight function exp(-y^2)

  std::size_t count() const { return nodes.size(); }
  // Highest polynomial degree integrated exactly: 2Q - 1.
  std::size_t exact_degree() const { return nodes.empty() ? 0 : 2 * nodes.size() - 1; }
};

// Q-point rule: nodes are the roots of H_Q found by Newton iteration, weights
// from the derivative formula.
QuadratureRule gauss_hermite(std::size_t q);

// sum_j coeff_j psi_{level_j} at a common frequency.
struct HermiteExpansion {
  double omega = 1.0;
  std::vector<std::pair<std::size_t, double>> terms;  // (level, coefficient)

  static HermiteExpansion from_basis(const HermiteBasisFunction& fn);
  static HermiteExpansion from_series(const WavefunctionSeries& series);

  std::size_t max_level() const;
  double operator()(double x) const;
};

struct OverlapResult {
  double value = 0.0;
  // False when the integrand's polynomial degree exceeds what the rule
  // integrates exactly, or the two frequencies differ.
  bool exact = true;
};

// Integral of f(x) g(x) dx with the substitution y = sqrt(omega_f) x.
OverlapResult overlap(const HermiteExpansion& f, const HermiteExpansion& g, const QuadratureRule& rule);

// Integral of f(x) g(x) dx for arbitrary callables whose product decays like
// exp(-omega x^2).
double integrate_product(const std::function<double(double)>& f,
                         const std::function<double(double)>& g, double omega,
                         const QuadratureRule& rule);

double eval_series_position(const WavefunctionSeries& series, double x);

struct GridFunction {
  std::vector<double> xs;
  std::vector<double> values;
};

inline constexpr std::size_t kDefaultGridPoints = 401;
// Default half-width 8 / sqrt(omega).
double default_grid_half_width(double omega);

// `points` equally spaced samples on [xmin, xmax]; requires points >= 2 and
// xmin < xmax.
GridFunction sample_grid(const std::function<double(double)>& fn, double xmin, double xmax,
                         std::size_t points);

}  // namespace nhho
