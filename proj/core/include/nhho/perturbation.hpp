#pragma once

#include <cstddef>
#include <vector>

#include "nhho/hamiltonian.hpp"

namespace nhho {

struct PerturbationResult {
  std::size_t n = 0;
  double omega = 1.0;
  double zeroth = 0.0;              // h_d (2n + 1)
  std::vector<double> corrections;  // orders 1 .. K

  double total() const;
  double max_abs_correction() const;
};

inline constexpr std::size_t kDefaultOrder = 10;

// Rayleigh-Schroedinger energy corrections of level n to order K, with
// unperturbed energies h_d (2m + 1) and perturbation H_N. Uses intermediate
// normalization <n|psi^(k)> = 0 for k >= 1:
//
//   E^(k)   = <n| H_N |psi^(k-1)>
//   psi^(k) = (E0_n - H_D)^-1 Q [ H_N psi^(k-1) - sum_{j=1..k} E^(j) psi^(k-j) ]
//
// Throws DomainError when h_d == 0.
PerturbationResult rs_corrections(const ModeDecomposition& decomp, std::size_t n,
                                  std::size_t max_order = kDefaultOrder);

// <n|H_N|n>; identically zero because H_N has no a+^r a^r term.
double first_order(const ModeDecomposition& decomp, std::size_t n);

enum class SeriesBranch { kRaising, kLowering };

// Psi_n = sum_k c_k |n + 2k>  (raising, omega_1)  or
// Phi_n = sum_k c_k |n - 2k>  (lowering, omega_2), with c_0 = 1.
struct WavefunctionSeries {
  std::size_t n = 0;
  SeriesBranch branch = SeriesBranch::kRaising;
  double omega = 1.0;
  std::vector<double> coeffs;

  // Fock level carrying coefficient k.
  std::size_t level(std::size_t k) const { return branch == SeriesBranch::kRaising ? n + 2 * k : n - 2 * k; }
  std::size_t highest_level() const;
  // Coefficient vector over |0> .. |dim-1>; throws DimensionError if a level
  // would fall outside.
  Eigen::VectorXd to_fock_vector(std::size_t dim) const;
};

// Closed form  c_k = f^k sqrt((n+2k)!/n!) / (2^k k!),  k = 0..K.
WavefunctionSeries build_series_raising(const TransformParams& params, std::size_t n,
                                        std::size_t max_k);
// Closed form  c_k = f^k sqrt(n!/(n-2k)!) / (2^k k!),  k = 0..floor(n/2).
WavefunctionSeries build_series_lowering(const TransformParams& params, std::size_t n);

// The same coefficients from the two-term recursion obtained by inserting the
// ansatz into H Psi = (n + 1/2) Psi on the respective branch:
//   raising:  c_k = f sqrt((n+2k)(n+2k-1)) / (2k) c_{k-1}
//   lowering: c_k = f sqrt((n-2k+2)(n-2k+1)) / (2k) c_{k-1}
WavefunctionSeries recurse_series_raising(const TransformParams& params, std::size_t n,
                                          std::size_t max_k);
WavefunctionSeries recurse_series_lowering(const TransformParams& params, std::size_t n);

// Running sums sum_{j<=k} c_j^2.
std::vector<double> partial_norms(const WavefunctionSeries& series);

}  // namespace nhho
