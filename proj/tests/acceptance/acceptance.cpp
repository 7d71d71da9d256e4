// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line each. Exit status is nonzero if anything fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "nhho/nhho.hpp"
#include "oracles.hpp"

using namespace nhho;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}

Outcome bounded(double worst, double bound) {
  return {worst <= bound, fmt("worst %.3e, bound %.1e", worst, bound)};
}

// 1
Outcome canonical_commutator() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> omega_dist(0.1, 5.0);
  const auto i_one = LadderPolynomial::scalar({0.0, 1.0});
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(100, 1)) {
    const TransformParams params(l, b);
    for (int k = 0; k < 3; ++k) {
      worst = std::max(worst, (verify_canonical_commutator(params, omega_dist(rng)) - i_one).max_abs_coefficient());
    }
  }
  return bounded(worst, 1e-14);
}

// 2
Outcome frequency_formulas() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(100, 2)) {
    const TransformParams params(l, b);
    // U = 0:  -(1-l^2) w^2 + 2(l+b) w + (1-b^2) = 0,  V = 0 with the sign of the middle term flipped.
    const auto [u_pos, u_neg] = oracle::quadratic_roots(-(1 - l * l), 2 * (l + b), 1 - b * b);
    const auto [v_pos, v_neg] = oracle::quadratic_roots(-(1 - l * l), -2 * (l + b), 1 - b * b);
    const double pu = std::max(u_pos, u_neg);
    const double pv = std::max(v_pos, v_neg);
    worst = std::max({worst, std::abs(omega_u_zero(params) - pu) / pu, std::abs(omega_v_zero(params) - pv) / pv});
  }
  const TransformParams spot(0.5, 0.2);
  worst = std::max({worst, std::abs(omega_u_zero(spot) - 2.4), std::abs(omega_v_zero(spot) - 0.5333333333333333)});
  return bounded(worst, 1e-12);
}

// 3
Outcome iso_spectrality() {
  // Reduced branch form: equality. Full form at the branch frequency: the
  // diagonal h_d (2n+1) is rounded once, so allow 8 eps (n + 1/2).
  constexpr double eps = std::numeric_limits<double>::epsilon();
  bool exact = true;
  double worst_rel = 0;
  for (const auto& [l, b] : oracle::parameter_points(20, 3)) {
    const TransformParams params(l, b);
    for (auto br : {ZeroBranch::kUZero, ZeroBranch::kVZero}) {
      const auto reduced = triangular_spectrum(hamiltonian_matrix(branch_hamiltonian(params, br), 64));
      const auto general = triangular_spectrum(hamiltonian_matrix(build_hamiltonian(params, branch_omega(params, br)), 64));
      for (std::size_t n = 0; n < 64; ++n) {
        exact = exact && reduced[n] == n + 0.5;
        worst_rel = std::max(worst_rel, std::abs(general[n] - (n + 0.5)) / ((n + 0.5) * eps));
      }
    }
  }
  return {exact && worst_rel <= 8, fmt("reduced form exact, general form worst %.2f eps(n+1/2), bound %.0f", worst_rel, 8)};
}

// 4
Outcome vanishing_corrections() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(50, 4)) {
    const TransformParams params(l, b);
    for (double w : {omega_u_zero(params), omega_v_zero(params)}) {
      const auto d = build_hamiltonian(params, w);
      for (std::size_t n = 0; n <= 10; ++n) worst = std::max(worst, rs_corrections(d, n, 8).max_abs_correction());
    }
  }
  return bounded(worst, 1e-12);
}

// 5
Outcome variational_branch() {
  const double l = 0.5;
  const double b = 0.2;
  const TransformParams params(l, b);
  const double closed = (l + b) * (l + b) / (4 * std::sqrt((1 - l * l) * (1 - b * b)) * (1 + l * b));
  const auto r = rs_corrections(build_hamiltonian(params, omega_variational(params)), 0, 2);
  const double diff = std::abs(r.corrections[1] - closed);
  return {diff <= 1e-9 && std::abs(closed - 0.131243) < 1e-6,
          fmt("eps_0^(2) = %.15f, deviation %.3e, bound 1e-9", r.corrections[1], diff)};
}

// 6
Outcome raising_coefficients() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(20, 6)) {
    const TransformParams params(l, b);
    const double f = params.coupling();
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto s = recurse_series_raising(params, n, 10);
      for (std::size_t k = 1; k <= 10; ++k) {
        // 2^k k! / (f^k sqrt((n+2k)!/n!)) with explicit factorials.
        const double ratio = std::sqrt(oracle::factorial(n + 2 * k) / oracle::factorial(n));
        const double scaled = s.coeffs[k] * std::pow(2.0, k) * oracle::factorial(k) / (std::pow(f, k) * ratio);
        worst = std::max(worst, std::abs(scaled - 1));
      }
    }
  }
  const TransformParams spot(0.5, 0.2);
  const double f = spot.coupling();
  const auto s = recurse_series_raising(spot, 0, 3);
  const double d1 = f * std::sqrt(2.0) / s.coeffs[1];
  const double d2 = f * f * std::sqrt(24.0) / s.coeffs[2];
  const double d3 = f * f * f * std::sqrt(720.0) / s.coeffs[3];
  worst = std::max({worst, std::abs(d1 - 2) / 2, std::abs(d2 - 8) / 8, std::abs(d3 - 48) / 48});
  return bounded(worst, 1e-12);
}

// 7
Outcome lowering_exactness() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(20, 7)) {
    const TransformParams params(l, b);
    const double w2 = omega_v_zero(params);
    for (std::size_t n = 0; n <= 12; ++n) {
      const std::size_t dim = n + 4;
      const auto dense = oracle::transformed_hamiltonian(l, b, w2, dim);
      const Eigen::VectorXcd c = build_series_lowering(params, n).to_fock_vector(dim).cast<std::complex<double>>();
      const Eigen::VectorXcd r = dense * c - (n + 0.5) * c;
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
      const auto rep = eigen_residual(hamiltonian_matrix(build_hamiltonian(params, w2), dim),
                                      build_series_lowering(params, n), n + 0.5);
      worst = std::max(worst, rep.interior);
    }
  }
  return bounded(worst, 1e-10);
}

// 8
Outcome normalization_and_energy() {
  bool unit = true;
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(20, 8)) {
    const TransformParams params(l, b);
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto up = build_series_raising(params, n, kDefaultOrder);
      const auto down = build_series_lowering(params, n);
      unit = unit && overlap_with_base(up) == 1.0 && overlap_with_base(down) == 1.0;
      const std::size_t dim = n + 2 * kDefaultOrder + 3;
      const auto m1 = oracle::transformed_hamiltonian(l, b, up.omega, dim);
      const auto m2 = oracle::transformed_hamiltonian(l, b, down.omega, dim);
      const double e1 = (m1.row(n) * up.to_fock_vector(dim).cast<std::complex<double>>())(0).real();
      const double e2 = (m2.row(n) * down.to_fock_vector(dim).cast<std::complex<double>>())(0).real();
      worst = std::max({worst, std::abs(e1 - (n + 0.5)), std::abs(e2 - (n + 0.5))});
      worst = std::max(worst, std::abs(energy_functional(hamiltonian_matrix(build_hamiltonian(params, up.omega), dim), up, n) - (n + 0.5)));
    }
  }
  auto out = bounded(worst, 1e-10);
  out.passed = out.passed && unit;
  out.detail += unit ? ", c_0 = 1 exactly" : ", c_0 != 1";
  return out;
}

// 9
Outcome lie_cross_check() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(100, 9)) {
    const TransformParams params(l, b);
    for (std::size_t n = 0; n <= 10; ++n) {
      worst = std::max({worst, std::abs(lie_energy(case_coefficients(params, ZeroBranch::kUZero), n) - (n + 0.5)),
                        std::abs(lie_energy(case_coefficients(params, ZeroBranch::kVZero), n) - (n + 0.5))});
    }
  }
  return bounded(worst, 1e-12);
}

// 10
Outcome ground_state() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(10, 10)) {
    const TransformParams params(l, b);
    const double w2 = omega_v_zero(params);
    const auto phi0 = build_series_lowering(params, 0);
    const double half = default_grid_half_width(w2);
    for (int i = 0; i < 401; ++i) {
      const double x = -half + 2 * half * i / 400.0;
      const double closed = std::pow(w2 / std::numbers::pi, 0.25) * std::exp(-w2 * x * x / 2);
      worst = std::max(worst, std::abs(eval_series_position(phi0, x) - closed));
    }
  }
  return bounded(worst, 1e-12);
}

// 11
Outcome four_way_identity() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(20, 11)) {
    for (std::size_t n = 0; n <= 6; ++n) {
      worst = std::max(worst, expectation_consistency(TransformParams(l, b), n).max_deviation(n + 0.5));
    }
  }
  return bounded(worst, 1e-10);
}

// 12
Outcome quadrature_health() {
  const auto rule = gauss_hermite(64);
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(5, 12)) {
    const TransformParams params(l, b);
    for (double w : {omega_u_zero(params), omega_v_zero(params)}) {
      for (std::size_t m = 0; m <= 20; ++m) {
        for (std::size_t n = 0; n <= 20; ++n) {
          const double v =
              overlap(HermiteExpansion::from_basis({m, w}), HermiteExpansion::from_basis({n, w}), rule).value;
          worst = std::max(worst, std::abs(v - (m == n ? 1.0 : 0.0)));
        }
      }
    }
  }
  return bounded(worst, 1e-10);
}

// 13
Outcome non_commutativity() {
  double smallest_off = std::numeric_limits<double>::infinity();
  double largest_on = 0;
  for (const auto& [l, b] : oracle::parameter_points(200, 13)) {
    const TransformParams params(l, b);
    if (std::abs(l + b) > 0.01) {
      for (double w : {omega_u_zero(params), omega_v_zero(params)}) {
        smallest_off = std::min(smallest_off, commutator_defect(params, w));
      }
    }
    const TransformParams mirror(l, -l);
    for (double w : {omega_u_zero(mirror), omega_v_zero(mirror)}) {
      largest_on = std::max(largest_on, commutator_defect(mirror, w));
    }
  }
  return {smallest_off > 1e-6 && largest_on <= 1e-14,
          fmt("off-line min %.3e (> 1e-6), on-line max %.3e (<= 1e-14)", smallest_off, largest_on)};
}

// 14
Outcome decay() {
  double worst = 0;
  for (const auto& [l, b] : oracle::parameter_points(20, 14)) {
    const TransformParams params(l, b);
    for (std::size_t n = 0; n <= 12; ++n) {
      const auto s = build_series_lowering(params, n);
      const double x = 10 / std::sqrt(s.omega);
      worst = std::max({worst, std::abs(eval_series_position(s, x)), std::abs(eval_series_position(s, -x))});
    }
  }
  return bounded(worst, 1e-10);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"canonical commutator preserved", canonical_commutator},
      {"branch frequencies", frequency_formulas},
      {"iso-spectral triangular spectra", iso_spectrality},
      {"vanishing corrections on both branches", vanishing_corrections},
      {"variational second-order correction", variational_branch},
      {"raising-series coefficients", raising_coefficients},
      {"lowering series is an exact eigenvector", lowering_exactness},
      {"normalization and energy functional", normalization_and_energy},
      {"Lie closed-form cross-check", lie_cross_check},
      {"ground state is the Gaussian", ground_state},
      {"four-way expectation identity", four_way_identity},
      {"Gauss-Hermite orthonormality", quadrature_health},
      {"H and H_D fail to commute off the similarity line", non_commutativity},
      {"decay at ten widths", decay},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s (%.0f ms)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), ms);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
