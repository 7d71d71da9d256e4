#pragma once

// Closed-form spectrum of the general one-mode quadratic Hamiltonian
//   H = s0 (a+a + 1/2) + s1 (a+)^2 + s2 a^2 + s3 a+ + s4 a,
//   eps_n = sqrt(s0^2 - 4 s1 s2) (n + 1/2) + (s2 s3^2 + s1 s4^2 - s0 s3 s4) / D.
//
// The published shift denominator D reads s0^2 - 4 s0 s1 s2, which disagrees
// with the square-root argument s0^2 - 4 s1 s2 unless s0 = 1. The shift term
// only matters when s3 or s4 is nonzero, so by default such inputs are
// refused and a reading has to be chosen explicitly.

#include <cstddef>

#include "nhho/hamiltonian.hpp"

namespace nhho {

struct LieCoefficients {
  double s0 = 1.0;
  double s1 = 0.0;  // (a+)^2
  double s2 = 0.0;  // a^2
  double s3 = 0.0;  // a+
  double s4 = 0.0;  // a

  double root_argument() const { return s0 * s0 - 4.0 * s1 * s2; }
};

enum class ShiftDenominator {
  kRefuse,        // throw if the shift term is nonzero
  kAsPrinted,     // s0^2 - 4 s0 s1 s2
  kRootArgument,  // s0^2 - 4 s1 s2
};

// Throws DomainError if the root argument is not positive, or if s3/s4 are
// nonzero under kRefuse, or if the selected denominator vanishes.
double lie_energy(const LieCoefficients& c, std::size_t n,
                  ShiftDenominator reading = ShiftDenominator::kRefuse);

// Coefficients as tabulated for the two zero branches:
//   kUZero -> (1, -f/2, 0, 0, 0),   kVZero -> (1, 0, f/2, 0, 0).
LieCoefficients case_coefficients(const TransformParams& params, ZeroBranch branch);

// Coefficients read off a decomposition and scaled so that s0 = 1:
//   s0 = 2 h_d, s1 = V / (4 norm), s2 = U / (4 norm), all divided by 2 h_d.
// On the zero branches this gives s1 = -f (resp. s2 = f), twice the tabulated
// value; the spectrum is unaffected because s1 s2 = 0 either way.
LieCoefficients decomposition_coefficients(const ModeDecomposition& decomp);

}  // namespace nhho
