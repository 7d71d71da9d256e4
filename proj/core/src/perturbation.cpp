#include "nhho/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "factorial.hpp"
#include "nhho/error.hpp"

namespace nhho {
namespace {

// log(2^k k!)
double log_double_factorial_even(std::size_t k) {
  return static_cast<double>(k) * std::log(2.0) + std::lgamma(static_cast<double>(k) + 1.0);
}

WavefunctionSeries make_series(const TransformParams& params, std::size_t n, SeriesBranch branch) {
  WavefunctionSeries s;
  s.n = n;
  s.branch = branch;
  s.omega = branch == SeriesBranch::kRaising ? omega_u_zero(params) : omega_v_zero(params);
  return s;
}

}  // namespace

double PerturbationResult::total() const {
  double out = zeroth;
  for (double c : corrections) out += c;
  return out;
}

double PerturbationResult::max_abs_correction() const {
  double out = 0.0;
  for (double c : corrections) out = std::max(out, std::abs(c));
  return out;
}

PerturbationResult rs_corrections(const ModeDecomposition& decomp, std::size_t n,
                                  std::size_t max_order) {
  if (decomp.h_d == 0.0) {
    throw DomainError("rs_corrections: h_d = 0 gives a degenerate unperturbed spectrum");
  }
  const LadderPolynomial h_n = decomp.perturbation();
  const std::size_t band = std::max(1u, h_n.bandwidth());
  // psi^(k) reaches at most n + band*k, and E^(K) only needs psi^(K-1).
  const std::size_t dim = n + band * (max_order + 1) + 1;

  auto e0 = [&](std::size_t m) { return decomp.h_d * (2.0 * static_cast<double>(m) + 1.0); };

  const FockMatrix hn = to_matrix(h_n, dim);
  const Eigen::MatrixXcd& hm = hn.entries();

  std::vector<Eigen::VectorXcd> psi;
  psi.reserve(max_order + 1);
  psi.push_back(Eigen::VectorXcd::Zero(dim));
  psi[0](n) = 1.0;

  PerturbationResult result;
  result.n = n;
  result.omega = decomp.omega;
  result.zeroth = e0(n);
  std::vector<Complex> energies(max_order + 1, Complex{});

  for (std::size_t k = 1; k <= max_order; ++k) {
    Eigen::VectorXcd rhs = hm * psi[k - 1];
    energies[k] = rhs(n);
    for (std::size_t j = 1; j <= k; ++j) rhs -= energies[j] * psi[k - j];
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim);
    for (std::size_t m = 0; m < dim; ++m) {
      if (m == n) continue;
      next(m) = rhs(m) / (e0(n) - e0(m));
    }
    psi.push_back(std::move(next));
    result.corrections.push_back(energies[k].real());
  }
  return result;
}

double first_order(const ModeDecomposition& decomp, std::size_t n) {
  return matrix_element(decomp.perturbation(), n, n).real();
}

std::size_t WavefunctionSeries::highest_level() const {
  if (coeffs.empty()) return n;
  return branch == SeriesBranch::kRaising ? level(coeffs.size() - 1) : n;
}

Eigen::VectorXd WavefunctionSeries::to_fock_vector(std::size_t dim) const {
  if (highest_level() >= dim) {
    std::ostringstream os;
    os << "series reaches level " << highest_level() << " but dimension is " << dim;
    throw DimensionError(os.str());
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < coeffs.size(); ++k) v(level(k)) = coeffs[k];
  return v;
}

WavefunctionSeries build_series_raising(const TransformParams& params, std::size_t n,
                                        std::size_t max_k) {
  auto s = make_series(params, n, SeriesBranch::kRaising);
  const double f = params.coupling();
  for (std::size_t k = 0; k <= max_k; ++k) {
    const double log_mag =
        0.5 * detail::log_factorial_ratio(n + 2 * k, n) - log_double_factorial_even(k);
    s.coeffs.push_back(std::pow(f, static_cast<double>(k)) * std::exp(log_mag));
  }
  return s;
}

WavefunctionSeries build_series_lowering(const TransformParams& params, std::size_t n) {
  auto s = make_series(params, n, SeriesBranch::kLowering);
  const double f = params.coupling();
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const double log_mag =
        0.5 * detail::log_factorial_ratio(n, n - 2 * k) - log_double_factorial_even(k);
    s.coeffs.push_back(std::pow(f, static_cast<double>(k)) * std::exp(log_mag));
  }
  return s;
}

WavefunctionSeries recurse_series_raising(const TransformParams& params, std::size_t n,
                                          std::size_t max_k) {
  auto s = make_series(params, n, SeriesBranch::kRaising);
  const double f = params.coupling();
  s.coeffs.push_back(1.0);
  for (std::size_t k = 1; k <= max_k; ++k) {
    const double top = static_cast<double>(n + 2 * k);
    s.coeffs.push_back(f * std::sqrt(top * (top - 1.0)) / (2.0 * static_cast<double>(k)) *
                       s.coeffs.back());
  }
  return s;
}

WavefunctionSeries recurse_series_lowering(const TransformParams& params, std::size_t n) {
  auto s = make_series(params, n, SeriesBranch::kLowering);
  const double f = params.coupling();
  s.coeffs.push_back(1.0);
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    const double top = static_cast<double>(n - 2 * k + 2);
    s.coeffs.push_back(f * std::sqrt(top * (top - 1.0)) / (2.0 * static_cast<double>(k)) *
                       s.coeffs.back());
  }
  return s;
}

std::vector<double> partial_norms(const WavefunctionSeries& series) {
  std::vector<double> out;
  double acc = 0.0;
  for (double c : series.coeffs) {
    acc += c * c;
    out.push_back(acc);
  }
  return out;
}

}  // namespace nhho
