#include "nhho/lie_closed_form.hpp"

#include <cmath>
#include <sstream>

#include "nhho/error.hpp"

namespace nhho {

double lie_energy(const LieCoefficients& c, std::size_t n, ShiftDenominator reading) {
  const double arg = c.root_argument();
  if (!(arg > 0.0)) {
    std::ostringstream os;
    os << "lie_energy: s0^2 - 4 s1 s2 must be positive (got " << arg << ")";
    throw DomainError(os.str());
  }
  const double level = std::sqrt(arg) * (static_cast<double>(n) + 0.5);
  if (c.s3 == 0.0 && c.s4 == 0.0) return level;

  double denom = 0.0;
  switch (reading) {
    case ShiftDenominator::kRefuse:
      throw DomainError(
          "lie_energy: shift term with s3 or s4 nonzero needs an explicit denominator reading");
    case ShiftDenominator::kAsPrinted:
      denom = c.s0 * c.s0 - 4.0 * c.s0 * c.s1 * c.s2;
      break;
    case ShiftDenominator::kRootArgument:
      denom = arg;
      break;
  }
  if (denom == 0.0) throw DomainError("lie_energy: shift denominator vanishes");
  return level + (c.s2 * c.s3 * c.s3 + c.s1 * c.s4 * c.s4 - c.s0 * c.s3 * c.s4) / denom;
}

LieCoefficients case_coefficients(const TransformParams& params, ZeroBranch branch) {
  const double half_f = 0.5 * params.coupling();
  LieCoefficients c;
  if (branch == ZeroBranch::kUZero) {
    c.s1 = -half_f;
  } else {
    c.s2 = half_f;
  }
  return c;
}

LieCoefficients decomposition_coefficients(const ModeDecomposition& decomp) {
  if (decomp.h_d == 0.0) throw DomainError("decomposition_coefficients: h_d = 0");
  const double s0 = 2.0 * decomp.h_d;
  LieCoefficients c;
  c.s0 = 1.0;
  c.s1 = decomp.v / (4.0 * decomp.norm) / s0;
  c.s2 = decomp.u / (4.0 * decomp.norm) / s0;
  return c;
}

}  // namespace nhho
