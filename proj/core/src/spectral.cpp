#include "nhho/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nhho/error.hpp"

namespace nhho {

std::string_view to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::kDiagonal: return "diagonal";
    case StructureTag::kLowerBand2: return "lower_band2";
    case StructureTag::kUpperBand2: return "upper_band2";
    case StructureTag::kFullBand2: return "full_band2";
  }
  return "unknown";
}

StructureTag classify_structure(const FockMatrix& m, double tol) {
  bool lower = false;
  bool upper = false;
  bool other = false;
  const std::size_t dim = m.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (r == c || std::abs(m(r, c)) <= tol) continue;
      if (r == c + 2) {
        lower = true;
      } else if (c == r + 2) {
        upper = true;
      } else {
        other = true;
      }
    }
  }
  if (other || (lower && upper)) return StructureTag::kFullBand2;
  if (lower) return StructureTag::kLowerBand2;
  if (upper) return StructureTag::kUpperBand2;
  return StructureTag::kDiagonal;
}

std::vector<double> triangular_spectrum(const FockMatrix& m) {
  if (classify_structure(m) == StructureTag::kFullBand2) {
    throw DomainError("triangular_spectrum: matrix is not triangular");
  }
  std::vector<double> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out[i] = m(i, i).real();
  return out;
}

FockMatrix hamiltonian_matrix(const ModeDecomposition& decomp, std::size_t dim) {
  return to_matrix(decomp.full(), dim);
}

ResidualReport eigen_residual(const FockMatrix& m, const WavefunctionSeries& series, double energy) {
  const std::size_t dim = m.dim();
  const std::size_t kmax = series.coeffs.empty() ? 0 : series.coeffs.size() - 1;
  std::size_t interior_end = dim;  // exclusive
  if (series.branch == SeriesBranch::kRaising) {
    const std::size_t reach = series.n + 2 * kmax;
    if (dim < reach + 3) {
      std::ostringstream os;
      os << "eigen_residual: raising series needs dimension >= " << reach + 3 << ", got " << dim;
      throw DimensionError(os.str());
    }
    interior_end = reach >= 1 ? reach - 1 : 0;
  } else if (dim < series.n + 1) {
    std::ostringstream os;
    os << "eigen_residual: lowering series needs dimension >= " << series.n + 1 << ", got " << dim;
    throw DimensionError(os.str());
  }

  const Eigen::VectorXcd c = series.to_fock_vector(dim).cast<Complex>();
  const Eigen::VectorXcd r = m.entries() * c - energy * c;
  ResidualReport out;
  for (std::size_t i = 0; i < dim; ++i) {
    const double v = std::abs(r(i));
    if (i < interior_end) {
      out.interior = std::max(out.interior, v);
    } else {
      out.boundary = std::max(out.boundary, v);
    }
  }
  return out;
}

double overlap_with_base(const WavefunctionSeries& series) {
  return series.coeffs.empty() ? 0.0 : series.coeffs.front();
}

double energy_functional(const FockMatrix& m, const WavefunctionSeries& series, std::size_t n) {
  if (n >= m.dim()) throw DimensionError("energy_functional: level outside matrix");
  const Eigen::VectorXcd c = series.to_fock_vector(m.dim()).cast<Complex>();
  return (m.entries().row(static_cast<Eigen::Index>(n)) * c)(0).real();
}

double ExpectationValues::max_deviation(double target) const {
  return std::max({std::abs(diagonal_lowering - target), std::abs(diagonal_raising - target),
                   std::abs(full_lowering - target), std::abs(full_raising - target)});
}

ExpectationValues expectation_consistency(const TransformParams& params, std::size_t n,
                                          std::size_t order) {
  const std::size_t dim = n + 2 * order + 3;
  const auto d1 = build_hamiltonian(params, omega_u_zero(params));
  const auto d2 = build_hamiltonian(params, omega_v_zero(params));
  const auto raising = build_series_raising(params, n, order);
  const auto lowering = build_series_lowering(params, n);

  ExpectationValues out{};
  out.diagonal_lowering = matrix_element(d2.diagonal_part(), n, n).real();
  out.diagonal_raising = matrix_element(d1.diagonal_part(), n, n).real();
  out.full_lowering = energy_functional(hamiltonian_matrix(d2, dim), lowering, n);
  out.full_raising = energy_functional(hamiltonian_matrix(d1, dim), raising, n);
  return out;
}

double commutator_defect(const TransformParams& params, double omega) {
  const auto d = build_hamiltonian(params, omega);
  return commutator(d.full(), d.diagonal_part()).max_abs_coefficient();
}

}  // namespace nhho
