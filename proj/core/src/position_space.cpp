#include "nhho/position_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nhho/error.hpp"

namespace nhho {

double hermite_poly(std::size_t n, double y) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * y;
  for (std::size_t k = 1; k < n; ++k) {
    const double next = 2.0 * y * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> eval_basis_all(std::size_t max_n, double omega, double x) {
  if (!(omega > 0.0)) throw DomainError("eval_basis: omega must be positive");
  const double y = std::sqrt(omega) * x;
  std::vector<double> out(max_n + 1);
  out[0] = std::pow(omega / std::numbers::pi, 0.25) * std::exp(-0.5 * y * y);
  if (max_n >= 1) out[1] = std::sqrt(2.0) * y * out[0];
  for (std::size_t k = 1; k < max_n; ++k) {
    const double kk = static_cast<double>(k);
    out[k + 1] = std::sqrt(2.0 / (kk + 1.0)) * y * out[k] - std::sqrt(kk / (kk + 1.0)) * out[k - 1];
  }
  return out;
}

double eval_basis(const HermiteBasisFunction& fn, double x) {
  return eval_basis_all(fn.n, fn.omega, x)[fn.n];
}

QuadratureRule gauss_hermite(std::size_t q) {
  if (q == 0) throw DomainError("gauss_hermite: need at least one node");
  // Newton on the orthonormal recurrence
  //   p_{j+1} = sqrt(2/(j+1)) y p_j - sqrt(j/(j+1)) p_{j-1},  p_0 = pi^(-1/4),
  // with p_Q' = sqrt(2Q) p_{Q-1}; weights are 2 / p_Q'^2. Roots are found
  // from the largest down, each guess extrapolated from earlier roots.
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  const std::size_t half = (q + 1) / 2;
  const double qd = static_cast<double>(q);
  std::vector<double> roots(half);
  std::vector<double> weights(half);
  double z = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * qd + 1.0) - 1.85575 * std::pow(2.0 * qd + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(qd, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[i - 2];
    }
    double deriv = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (std::size_t j = 0; j < q; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double jd = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / (jd + 1.0)) * p2 - std::sqrt(jd / (jd + 1.0)) * p3;
      }
      deriv = std::sqrt(2.0 * qd) * p2;
      const double step = p1 / deriv;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    // Odd Q: the middle root is exactly zero.
    if (q % 2 == 1 && i == half - 1) z = 0.0;
    roots[i] = z;
    weights[i] = 2.0 / (deriv * deriv);
  }
  if (q % 2 == 1) {
    // Re-evaluate the middle weight at exactly y = 0.
    double p1 = pim4;
    double p2 = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      const double p3 = p2;
      p2 = p1;
      const double jd = static_cast<double>(j);
      p1 = -std::sqrt(jd / (jd + 1.0)) * p3;
    }
    const double deriv = std::sqrt(2.0 * qd) * p2;
    weights[half - 1] = 2.0 / (deriv * deriv);
  }

  QuadratureRule rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (std::size_t i = 0; i < half; ++i) {
    rule.nodes[i] = -roots[i];
    rule.weights[i] = weights[i];
    rule.nodes[q - 1 - i] = roots[i];
    rule.weights[q - 1 - i] = weights[i];
  }
  return rule;
}

HermiteExpansion HermiteExpansion::from_basis(const HermiteBasisFunction& fn) {
  return HermiteExpansion{fn.omega, {{fn.n, 1.0}}};
}

HermiteExpansion HermiteExpansion::from_series(const WavefunctionSeries& series) {
  HermiteExpansion e;
  e.omega = series.omega;
  for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
    e.terms.emplace_back(series.level(k), series.coeffs[k]);
  }
  return e;
}

std::size_t HermiteExpansion::max_level() const {
  std::size_t m = 0;
  for (const auto& [level, c] : terms) m = std::max(m, level);
  return m;
}

double HermiteExpansion::operator()(double x) const {
  if (terms.empty()) return 0.0;
  const auto values = eval_basis_all(max_level(), omega, x);
  double out = 0.0;
  for (const auto& [level, c] : terms) out += c * values[level];
  return out;
}

double integrate_product(const std::function<double(double)>& f,
                         const std::function<double(double)>& g, double omega,
                         const QuadratureRule& rule) {
  if (!(omega > 0.0)) throw DomainError("integrate_product: omega must be positive");
  const double scale = 1.0 / std::sqrt(omega);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.count(); ++i) {
    const double y = rule.nodes[i];
    const double x = y * scale;
    acc += rule.weights[i] * std::exp(y * y) * f(x) * g(x);
  }
  return acc * scale;
}

OverlapResult overlap(const HermiteExpansion& f, const HermiteExpansion& g, const QuadratureRule& rule) {
  OverlapResult out;
  out.exact = f.omega == g.omega && f.max_level() + g.max_level() <= rule.exact_degree();
  out.value = integrate_product(std::cref(f), std::cref(g), f.omega, rule);
  return out;
}

double eval_series_position(const WavefunctionSeries& series, double x) {
  return HermiteExpansion::from_series(series)(x);
}

double default_grid_half_width(double omega) { return 8.0 / std::sqrt(omega); }

GridFunction sample_grid(const std::function<double(double)>& fn, double xmin, double xmax,
                         std::size_t points) {
  if (points < 2 || !(xmin < xmax)) {
    std::ostringstream os;
    os << "sample_grid: need points >= 2 and xmin < xmax (got " << points << ", [" << xmin << ", "
       << xmax << "])";
    throw DomainError(os.str());
  }
  GridFunction out;
  out.xs.reserve(points);
  out.values.reserve(points);
  const double step = (xmax - xmin) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? xmax : xmin + step * static_cast<double>(i);
    out.xs.push_back(x);
    out.values.push_back(fn(x));
  }
  return out;
}

}  // namespace nhho
