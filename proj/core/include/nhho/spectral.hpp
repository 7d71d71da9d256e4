#pragma once

// Fock-matrix checks: band structure, triangular spectra, eigen-residuals of
// the wavefunction series and the expectation identities built on them.

#include <cstddef>
#include <string_view>
#include <vector>

#include "nhho/hamiltonian.hpp"
#include "nhho/ladder_polynomial.hpp"
#include "nhho/perturbation.hpp"

namespace nhho {

enum class StructureTag {
  kDiagonal,
  kLowerBand2,  // only m = n + 2 off the diagonal (omega_1 branch)
  kUpperBand2,  // only m = n - 2 off the diagonal (omega_2 branch)
  kFullBand2,   // both bands, or anything else that is not triangular
};

std::string_view to_string(StructureTag tag);

inline constexpr double kStructureTolerance = 1e-13;

StructureTag classify_structure(const FockMatrix& m, double tol = kStructureTolerance);

// Real parts of the diagonal, in index order. Throws DomainError for
// kFullBand2; no general eigensolver is provided.
std::vector<double> triangular_spectrum(const FockMatrix& m);

FockMatrix hamiltonian_matrix(const ModeDecomposition& decomp, std::size_t dim);

// Max-norm of (M - E) c. For a raising series the rows from n + 2K - 1 on are
// touched by the truncated tail and are reported separately as `boundary`.
struct ResidualReport {
  double interior = 0.0;
  double boundary = 0.0;
};

ResidualReport eigen_residual(const FockMatrix& m, const WavefunctionSeries& series, double energy);

// <psi_n|Psi_n> under intermediate normalization, i.e. c_0.
double overlap_with_base(const WavefunctionSeries& series);

// Row n of M c, i.e. <psi_n|H|Psi_n>.
double energy_functional(const FockMatrix& m, const WavefunctionSeries& series, std::size_t n);

struct ExpectationValues {
  double diagonal_lowering;  // <phi_n|H_D|phi_n> at omega_2
  double diagonal_raising;   // <psi_n|H_D|psi_n> at omega_1
  double full_lowering;      // <phi_n|H|Phi_n>
  double full_raising;       // <psi_n|H|Psi_n>

  double max_deviation(double target) const;
};

ExpectationValues expectation_consistency(const TransformParams& params, std::size_t n,
                                          std::size_t order = kDefaultOrder);

// Largest coefficient magnitude of [H, H_D]. Zero iff U = V = 0, which on the
// branch frequencies happens exactly when lambda + beta = 0.
double commutator_defect(const TransformParams& params, double omega);

}  // namespace nhho
