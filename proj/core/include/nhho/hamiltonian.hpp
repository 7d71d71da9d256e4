#pragma once

// The transformed oscillator
//
//   x -> (x + i lambda p) / sqrt(1 + lambda beta)
//   p -> (p + i beta x)   / sqrt(1 + lambda beta)
//   H  = (p')^2 / 2 + (x')^2 / 2
//
// expressed through ladder operators at a free frequency omega,
//   x = (a + a+) / sqrt(2 omega),   p = i sqrt(omega / 2) (a+ - a),
// and split as H = H_D + H_N with
//   H_D = h_d (2 a+a + 1)
//   H_N = (U a^2 + V (a+)^2) / (4 (1 + lambda beta)).

#include <optional>
#include <string>

#include "nhho/ladder_polynomial.hpp"

namespace nhho {

// (lambda, beta) restricted to the open square |lambda| < 1, |beta| < 1.
class TransformParams {
 public:
  // Throws DomainError naming the violated bound.
  TransformParams(double lambda, double beta);

  // Returns a diagnostic if (lambda, beta) is outside the domain.
  static std::optional<std::string> check(double lambda, double beta);

  double lambda() const { return lambda_; }
  double beta() const { return beta_; }
  // 1 + lambda beta; strictly positive on the domain.
  double norm() const { return 1.0 + lambda_ * beta_; }
  // f = (lambda + beta) / (1 + lambda beta); |f| < 1 on the domain.
  double coupling() const { return (lambda_ + beta_) / norm(); }

 private:
  double lambda_;
  double beta_;
};

enum class ZeroBranch {
  kUZero,  // coefficient of a^2 vanishes, omega = omega_1
  kVZero,  // coefficient of (a+)^2 vanishes, omega = omega_2
};

struct ModeDecomposition {
  double omega = 1.0;
  double h_d = 0.5;
  double u = 0.0;
  double v = 0.0;
  double f = 0.0;
  double norm = 1.0;  // 1 + lambda beta

  // h_d (2 a+a + 1)
  LadderPolynomial diagonal_part() const;
  // (U a^2 + V (a+)^2) / (4 norm)
  LadderPolynomial perturbation() const;
  LadderPolynomial full() const { return diagonal_part() + perturbation(); }
};

LadderPolynomial transformed_position(const TransformParams& params, double omega);
LadderPolynomial transformed_momentum(const TransformParams& params, double omega);

// [x', p'], which should be i times the identity for every valid input.
LadderPolynomial verify_canonical_commutator(const TransformParams& params, double omega);

// Closed-form (h_d, U, V) at the given frequency.
ModeDecomposition build_hamiltonian(const TransformParams& params, double omega);

// The same Hamiltonian obtained by squaring transformed_position and
// transformed_momentum in the ladder algebra.
LadderPolynomial expand_hamiltonian(const TransformParams& params, double omega);

// Reduced forms on the zero branches: h_d = 1/2 and one of U, V identically 0.
ModeDecomposition branch_hamiltonian(const TransformParams& params, ZeroBranch branch);

// omega_1 = (1 + beta) / (1 - lambda)
double omega_u_zero(const TransformParams& params);
// omega_2 = (1 - beta) / (1 + lambda)
double omega_v_zero(const TransformParams& params);
// Stationary point of the zeroth-order energy: sqrt((1 - beta^2) / (1 - lambda^2)).
double omega_variational(const TransformParams& params);
double branch_omega(const TransformParams& params, ZeroBranch branch);

// Both roots of the quadratic in omega whose positive root is the branch
// frequency. For U = 0 the other root is -omega_2; for V = 0 it is -omega_1.
struct QuadraticRoots {
  double positive;
  double negative;
};
QuadraticRoots frequency_roots(const TransformParams& params, ZeroBranch branch);

// H - H^+; vanishes iff lambda + beta = 0.
LadderPolynomial hermiticity_defect(const TransformParams& params, double omega);

}  // namespace nhho
