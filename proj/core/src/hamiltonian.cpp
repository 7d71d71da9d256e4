#include "nhho/hamiltonian.hpp"

#include <cmath>
#include <sstream>

#include "nhho/error.hpp"

namespace nhho {
namespace {

void require_positive_omega(double omega, const char* where) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    std::ostringstream os;
    os << where << ": omega must be positive and finite (got " << omega << ")";
    throw DomainError(os.str());
  }
}

// Stable real roots of a w^2 + b w + c with a > 0 and a positive discriminant.
QuadraticRoots solve_quadratic(double a, double b, double c) {
  const double disc = std::sqrt(b * b - 4.0 * a * c);
  const double q = -0.5 * (b + std::copysign(disc, b));
  double r1 = q / a;
  double r2 = c / q;
  if (r1 < r2) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace

TransformParams::TransformParams(double lambda, double beta) : lambda_(lambda), beta_(beta) {
  if (auto err = check(lambda, beta)) throw DomainError(*err);
}

std::optional<std::string> TransformParams::check(double lambda, double beta) {
  std::ostringstream os;
  if (!std::isfinite(lambda) || !(std::abs(lambda) < 1.0)) {
    os << "lambda out of domain: require |lambda| < 1 (got " << lambda << ")";
    return os.str();
  }
  if (!std::isfinite(beta) || !(std::abs(beta) < 1.0)) {
    os << "beta out of domain: require |beta| < 1 (got " << beta << ")";
    return os.str();
  }
  return std::nullopt;
}

LadderPolynomial ModeDecomposition::diagonal_part() const {
  return LadderPolynomial::monomial(1, 1, 2.0 * h_d) + LadderPolynomial::scalar(h_d);
}

LadderPolynomial ModeDecomposition::perturbation() const {
  const double denom = 4.0 * norm;
  return LadderPolynomial::monomial(0, 2, u / denom) + LadderPolynomial::monomial(2, 0, v / denom);
}

LadderPolynomial transformed_position(const TransformParams& params, double omega) {
  require_positive_omega(omega, "transformed_position");
  const Complex i{0.0, 1.0};
  const auto a = LadderPolynomial::annihilation();
  const auto ad = LadderPolynomial::creation();
  const auto x = (a + ad) * (1.0 / std::sqrt(2.0 * omega));
  const auto p = (ad - a) * (i * std::sqrt(omega / 2.0));
  return (x + p * (i * params.lambda())) * (1.0 / std::sqrt(params.norm()));
}

LadderPolynomial transformed_momentum(const TransformParams& params, double omega) {
  require_positive_omega(omega, "transformed_momentum");
  const Complex i{0.0, 1.0};
  const auto a = LadderPolynomial::annihilation();
  const auto ad = LadderPolynomial::creation();
  const auto x = (a + ad) * (1.0 / std::sqrt(2.0 * omega));
  const auto p = (ad - a) * (i * std::sqrt(omega / 2.0));
  return (p + x * (i * params.beta())) * (1.0 / std::sqrt(params.norm()));
}

LadderPolynomial verify_canonical_commutator(const TransformParams& params, double omega) {
  return commutator(transformed_position(params, omega), transformed_momentum(params, omega));
}

ModeDecomposition build_hamiltonian(const TransformParams& params, double omega) {
  require_positive_omega(omega, "build_hamiltonian");
  const double l = params.lambda();
  const double b = params.beta();
  const double kinetic = (1.0 - l * l) * omega;
  const double potential = (1.0 - b * b) / omega;
  ModeDecomposition d;
  d.omega = omega;
  d.norm = params.norm();
  d.f = params.coupling();
  d.h_d = (kinetic + potential) / (4.0 * d.norm);
  d.v = -kinetic + potential - 2.0 * (l + b);
  d.u = -kinetic + potential + 2.0 * (l + b);
  return d;
}

LadderPolynomial expand_hamiltonian(const TransformParams& params, double omega) {
  const auto x = transformed_position(params, omega);
  const auto p = transformed_momentum(params, omega);
  return (p * p + x * x) * 0.5;
}

ModeDecomposition branch_hamiltonian(const TransformParams& params, ZeroBranch branch) {
  ModeDecomposition d;
  d.omega = branch_omega(params, branch);
  d.norm = params.norm();
  d.f = params.coupling();
  d.h_d = 0.5;
  const double shift = 4.0 * (params.lambda() + params.beta());
  if (branch == ZeroBranch::kUZero) {
    d.u = 0.0;
    d.v = -shift;
  } else {
    d.u = shift;
    d.v = 0.0;
  }
  return d;
}

double omega_u_zero(const TransformParams& params) {
  return (1.0 + params.beta()) / (1.0 - params.lambda());
}

double omega_v_zero(const TransformParams& params) {
  return (1.0 - params.beta()) / (1.0 + params.lambda());
}

double omega_variational(const TransformParams& params) {
  const double l = params.lambda();
  const double b = params.beta();
  return std::sqrt((1.0 - b * b) / (1.0 - l * l));
}

double branch_omega(const TransformParams& params, ZeroBranch branch) {
  return branch == ZeroBranch::kUZero ? omega_u_zero(params) : omega_v_zero(params);
}

QuadraticRoots frequency_roots(const TransformParams& params, ZeroBranch branch) {
  // U = 0:  (1 - l^2) w^2 - 2 (l + b) w - (1 - b^2) = 0
  // V = 0:  (1 - l^2) w^2 + 2 (l + b) w - (1 - b^2) = 0
  const double l = params.lambda();
  const double b = params.beta();
  const double sign = branch == ZeroBranch::kUZero ? -1.0 : 1.0;
  return solve_quadratic(1.0 - l * l, sign * 2.0 * (l + b), -(1.0 - b * b));
}

LadderPolynomial hermiticity_defect(const TransformParams& params, double omega) {
  const auto h = build_hamiltonian(params, omega).full();
  return h - adjoint(h);
}

}  // namespace nhho
