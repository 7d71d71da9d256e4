#include "cli/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "nhho/nhho.hpp"

namespace nhho::cli {
namespace {

using nhho::SeriesBranch;

class Checker {
 public:
  void at_most(std::string name, double observed, double bound) {
    results_.push_back({std::move(name), observed <= bound, observed, bound, false});
  }
  void at_least(std::string name, double observed, double bound) {
    results_.push_back({std::move(name), observed > bound, observed, bound, true});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::vector<TransformParams> parameter_sample(const VerifyOptions& options) {
  std::vector<TransformParams> out = {{0.5, 0.2}, {0.0, 0.0}, {0.4, -0.4}, {-0.3, 0.6}};
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> dist(-0.9, 0.9);
  while (out.size() < options.samples + 4) {
    const double l = dist(rng);
    const double b = dist(rng);
    out.emplace_back(l, b);
  }
  return out;
}

// Random polynomial with small integer coefficients, so products are exact.
LadderPolynomial random_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> power(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> count(1, 3);
  LadderPolynomial p;
  for (int t = count(rng); t > 0; --t) {
    const auto r = static_cast<unsigned>(power(rng));
    const auto s = static_cast<unsigned>(power(rng));
    p += LadderPolynomial::monomial(r, s, Complex(coeff(rng), coeff(rng)));
  }
  return p;
}

double max_abs_diff(const LadderPolynomial& p, const LadderPolynomial& q) {
  return (p - q).max_abs_coefficient();
}

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto sample = parameter_sample(options);
  Checker check;

  auto decompose = [&](const TransformParams& p, double omega) {
    auto d = build_hamiltonian(p, omega);
    if (options.fault == Fault::kFlipVSign) d.v += 4.0 * (p.lambda() + p.beta());
    return d;
  };

  // Ladder algebra.
  {
    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    double assoc = 0.0;
    double distrib = 0.0;
    double adj = 0.0;
    double self_comm = 0.0;
    double homo = 0.0;
    for (int i = 0; i < 200; ++i) {
      const auto p = random_polynomial(rng);
      const auto q = random_polynomial(rng);
      const auto r = random_polynomial(rng);
      assoc = std::max(assoc, max_abs_diff((p * q) * r, p * (q * r)));
      distrib = std::max(distrib, max_abs_diff(p * (q + r), p * q + p * r));
      adj = std::max(adj, max_abs_diff(adjoint(adjoint(p)), p));
      self_comm = std::max(self_comm, commutator(p, p).max_abs_coefficient());
      if (i < 40) {
        const std::size_t dim = 12;
        const std::size_t d = std::max(p.max_degree(), q.max_degree());
        const auto lhs = to_matrix(p * q, dim).entries();
        const auto rhs = (to_matrix(p, dim).entries() * to_matrix(q, dim).entries()).eval();
        const auto block = static_cast<Eigen::Index>(dim - d);
        const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
        homo = std::max(homo, (lhs.topLeftCorner(block, block) - rhs.topLeftCorner(block, block))
                                  .cwiseAbs()
                                  .maxCoeff() / scale);
      }
    }
    check.at_most("normal-ordered product is associative", assoc, 0.0);
    check.at_most("product distributes over sum", distrib, 0.0);
    check.at_most("adjoint is an involution", adj, 0.0);
    check.at_most("[p, p] = 0", self_comm, 0.0);
    check.at_most("to_matrix is a truncated homomorphism (relative)", homo, 1e-12);
  }

  // Hamiltonian construction.
  {
    double canon = 0.0;
    double uv = 0.0;
    double expanded = 0.0;
    double adj = 0.0;
    double herm_off = 0.0;
    double herm_on = std::numeric_limits<double>::infinity();
    for (const auto& p : sample) {
      const double s = p.lambda() + p.beta();
      for (double w : {omega_u_zero(p), omega_v_zero(p), 1.7}) {
        const auto c = verify_canonical_commutator(p, w);
        canon = std::max(canon, max_abs_diff(c, LadderPolynomial::scalar(Complex{0.0, 1.0})));
        const auto d = decompose(p, w);
        uv = std::max(uv, std::abs(d.u - d.v - 4.0 * s));
        expanded = std::max(expanded, max_abs_diff(d.full(), expand_hamiltonian(p, w)));
        const auto mirrored = decompose(TransformParams(-p.lambda(), -p.beta()), w);
        adj = std::max(adj, max_abs_diff(adjoint(d.full()), mirrored.full()));
        const double defect = hermiticity_defect(p, w).max_abs_coefficient();
        if (s == 0.0) {
          herm_off = std::max(herm_off, defect);
        } else if (std::abs(s) > 0.01) {
          herm_on = std::min(herm_on, defect);
        }
      }
    }
    check.at_most("[x', p'] = i", canon, 1e-14);
    check.at_most("U-V=4(lambda+beta)", uv, 1e-13);
    check.at_most("H_D + H_N equals the expanded transformed Hamiltonian", expanded, 1e-12);
    check.at_most("adjoint H(lambda, beta) = H(-lambda, -beta)", adj, 1e-14);
    check.at_most("H - H^+ vanishes on lambda = -beta", herm_off, 1e-14);
    check.at_least("H - H^+ nonzero off lambda = -beta", herm_on, 1e-6);
  }

  // Frequency selection.
  {
    double root1 = 0.0;
    double root2 = 0.0;
    double other = 0.0;
    double disc = 0.0;
    double u_zero = 0.0;
    double v_zero = 0.0;
    for (const auto& p : sample) {
      const double l = p.lambda();
      const double b = p.beta();
      const auto ru = frequency_roots(p, ZeroBranch::kUZero);
      const auto rv = frequency_roots(p, ZeroBranch::kVZero);
      root1 = std::max(root1, std::abs(ru.positive - omega_u_zero(p)));
      root2 = std::max(root2, std::abs(rv.positive - omega_v_zero(p)));
      other = std::max({other, std::abs(ru.negative + omega_v_zero(p)),
                        std::abs(rv.negative + omega_u_zero(p))});
      disc = std::max(disc, std::abs((l + b) * (l + b) + (1 - l * l) * (1 - b * b) -
                                     (1 + l * b) * (1 + l * b)));
      u_zero = std::max(u_zero, std::abs(decompose(p, omega_u_zero(p)).u));
      v_zero = std::max(v_zero, std::abs(decompose(p, omega_v_zero(p)).v));
    }
    check.at_most("omega_1 is the positive root of U = 0", root1, 1e-12);
    check.at_most("omega_2 is the positive root of V = 0", root2, 1e-12);
    check.at_most("second roots are -omega_2 and -omega_1", other, 1e-12);
    check.at_most("discriminant reduces to (1 + lambda beta)^2", disc, 1e-13);
    check.at_most("U(omega_1) = 0", u_zero, 1e-12);
    check.at_most("V(omega_2) = 0", v_zero, 1e-12);
  }

  // Perturbation series and spectra.
  {
    double corr_u = 0.0;
    double corr_v = 0.0;
    double first = 0.0;
    double spec = 0.0;
    bool structure_ok = true;
    for (const auto& p : sample) {
      const auto d1 = decompose(p, omega_u_zero(p));
      const auto d2 = decompose(p, omega_v_zero(p));
      for (std::size_t n = 0; n <= 10; ++n) {
        corr_u = std::max(corr_u, rs_corrections(d1, n, options.orders).max_abs_correction());
        corr_v = std::max(corr_v, rs_corrections(d2, n, options.orders).max_abs_correction());
        first = std::max(first, std::abs(first_order(decompose(p, omega_variational(p)), n)));
      }
      for (const auto* d : {&d1, &d2}) {
        const auto m = hamiltonian_matrix(*d, 64);
        const auto tag = classify_structure(m);
        const double s = p.lambda() + p.beta();
        const auto expected = s == 0.0 ? StructureTag::kDiagonal
                              : d == &d1 ? StructureTag::kLowerBand2
                                         : StructureTag::kUpperBand2;
        if (tag != expected) {
          structure_ok = false;
          continue;
        }
        const auto values = triangular_spectrum(m);
        for (std::size_t n = 0; n < values.size(); ++n) {
          const double target = static_cast<double>(n) + 0.5;
          spec = std::max(spec, std::abs(values[n] - target) / (DBL_EPSILON * target));
        }
      }
    }
    check.at_most("corrections vanish on the U = 0 branch through order " +
                      std::to_string(options.orders),
                  corr_u, 1e-12);
    check.at_most("corrections vanish on the V = 0 branch through order " +
                      std::to_string(options.orders),
                  corr_v, 1e-12);
    check.at_most("first-order correction vanishes at any omega", first, 0.0);
    check.at_most("branch matrices are triangular band-2", structure_ok ? 0.0 : 1.0, 0.0);
    check.at_most("triangular spectra equal n + 1/2 (units of eps)", spec, 8.0);

    const TransformParams p(0.5, 0.2);
    const double l = p.lambda();
    const double b = p.beta();
    const auto dv = decompose(p, omega_variational(p));
    const double e2 = rs_corrections(dv, 0, 2).corrections.at(1);
    const double closed = (l + b) * (l + b) / (4.0 * std::sqrt((1 - l * l) * (1 - b * b)) * (1 + l * b));
    check.at_most("variational second-order correction matches closed form", std::abs(e2 - closed), 1e-9);
    check.at_least("variational second-order correction is nonzero", std::abs(e2), 1e-6);
  }

  // Wavefunction series.
  {
    double raise = 0.0;
    double lower = 0.0;
    double denom = 0.0;
    double res_low = 0.0;
    double res_raise = 0.0;
    double norm = 0.0;
    double energy = 0.0;
    double expect = 0.0;
    for (const auto& p : sample) {
      const double f = p.coupling();
      for (std::size_t n = 0; n <= 12; ++n) {
        const auto cr = build_series_raising(p, n, 12);
        const auto rr = recurse_series_raising(p, n, 12);
        for (std::size_t k = 0; k < cr.coeffs.size(); ++k) {
          const double scale = std::max(std::abs(cr.coeffs[k]), 1e-300);
          raise = std::max(raise, std::abs(cr.coeffs[k] - rr.coeffs[k]) / scale);
          if (f != 0.0 && n <= 8 && k <= 10) {
            const double ratio = std::exp(0.5 * (std::lgamma(n + 2.0 * k + 1.0) - std::lgamma(n + 1.0)));
            const double two_k_fact = std::pow(2.0, static_cast<double>(k)) * std::tgamma(k + 1.0);
            denom = std::max(denom, std::abs(rr.coeffs[k] * two_k_fact /
                                                 (std::pow(f, static_cast<double>(k)) * ratio) - 1.0));
          }
        }
        const auto cl = build_series_lowering(p, n);
        const auto rl = recurse_series_lowering(p, n);
        for (std::size_t k = 0; k < cl.coeffs.size(); ++k) {
          const double scale = std::max(std::abs(cl.coeffs[k]), 1e-300);
          lower = std::max(lower, std::abs(cl.coeffs[k] - rl.coeffs[k]) / scale);
        }
        const auto d2 = decompose(p, omega_v_zero(p));
        res_low = std::max(res_low, eigen_residual(hamiltonian_matrix(d2, n + 4), cl, n + 0.5).interior);
        if (n <= 8) {
          const auto d1 = decompose(p, omega_u_zero(p));
          const auto series = build_series_raising(p, n, 10);
          const auto m1 = hamiltonian_matrix(d1, n + 2 * 10 + 3);
          res_raise = std::max(res_raise, eigen_residual(m1, series, n + 0.5).interior);
          norm = std::max({norm, std::abs(overlap_with_base(series) - 1.0),
                           std::abs(overlap_with_base(cl) - 1.0)});
          energy = std::max({energy, std::abs(energy_functional(m1, series, n) - (n + 0.5)),
                             std::abs(energy_functional(hamiltonian_matrix(d2, n + 4), cl, n) - (n + 0.5))});
        }
        if (n <= 6) expect = std::max(expect, expectation_consistency(p, n, 10).max_deviation(n + 0.5));
      }
    }
    check.at_most("raising recursion equals closed form (relative)", raise, 1e-12);
    check.at_most("lowering recursion equals closed form (relative)", lower, 1e-12);
    check.at_most("raising coefficients carry 2^k k! denominators", denom, 1e-12);
    check.at_most("lowering series is an exact eigenvector", res_low, 1e-10);
    check.at_most("raising series interior residual", res_raise, 1e-10);
    check.at_most("<psi_n|Psi_n> = 1", norm, 0.0);
    check.at_most("<psi_n|H|Psi_n> = n + 1/2", energy, 1e-10);
    check.at_most("four-way expectation identity", expect, 1e-10);
  }

  // Lie-algebraic closed form.
  {
    double lie = 0.0;
    double factor = 0.0;
    for (const auto& p : sample) {
      for (auto branch : {ZeroBranch::kUZero, ZeroBranch::kVZero}) {
        const auto c = case_coefficients(p, branch);
        const auto dc = decomposition_coefficients(branch_hamiltonian(p, branch));
        for (std::size_t n = 0; n <= 10; ++n) {
          lie = std::max({lie, std::abs(lie_energy(c, n) - (n + 0.5)),
                          std::abs(lie_energy(dc, n) - (n + 0.5))});
        }
        factor = std::max({factor, std::abs(dc.s1 - 2.0 * c.s1), std::abs(dc.s2 - 2.0 * c.s2)});
      }
    }
    check.at_most("Lie closed form gives n + 1/2 on both branches", lie, 1e-12);
    check.at_most("decomposition s1/s2 are twice the tabulated values", factor, 1e-12);
  }

  // Position space.
  {
    const auto rule = gauss_hermite(64);
    double ortho = 0.0;
    double ground = 0.0;
    double decay = 0.0;
    double fock = 0.0;
    const TransformParams p(0.5, 0.2);
    for (double w : {omega_u_zero(p), omega_v_zero(p)}) {
      for (std::size_t m = 0; m <= 20; ++m) {
        for (std::size_t n = 0; n <= m; ++n) {
          const auto o = overlap(HermiteExpansion::from_basis({m, w}), HermiteExpansion::from_basis({n, w}), rule);
          ortho = std::max(ortho, std::abs(o.value - (m == n ? 1.0 : 0.0)));
        }
      }
    }
    for (const auto& q : sample) {
      const double w2 = omega_v_zero(q);
      const auto phi0 = build_series_lowering(q, 0);
      const auto grid = sample_grid([&](double x) { return eval_series_position(phi0, x); },
                                    -default_grid_half_width(w2), default_grid_half_width(w2), 401);
      for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        const double x = grid.xs[i];
        const double gauss = std::pow(w2 / std::numbers::pi, 0.25) * std::exp(-w2 * x * x / 2.0);
        ground = std::max(ground, std::abs(grid.values[i] - gauss));
      }
      for (std::size_t n = 0; n <= 12; ++n) {
        const auto series = build_series_lowering(q, n);
        const double edge = 10.0 / std::sqrt(w2);
        decay = std::max({decay, std::abs(eval_series_position(series, edge)),
                          std::abs(eval_series_position(series, -edge))});
        const auto o = overlap(HermiteExpansion::from_basis({n, w2}), HermiteExpansion::from_series(series), rule);
        fock = std::max(fock, std::abs(o.value - series.coeffs.front()));
      }
    }
    check.at_most("Gauss-Hermite orthonormality, Q = 64", ortho, 1e-10);
    check.at_most("ground state equals (omega_2/pi)^(1/4) exp(-omega_2 x^2/2)", ground, 1e-12);
    check.at_most("quadrature <phi_n|Phi_n> equals c_0", fock, 1e-10);
    check.at_most("lowering series decays at sqrt(omega_2)|x| = 10", decay, 1e-10);
  }

  // [H, H_D].
  {
    double on_line = 0.0;
    double off_line = std::numeric_limits<double>::infinity();
    for (const auto& p : sample) {
      const double s = p.lambda() + p.beta();
      for (double w : {omega_u_zero(p), omega_v_zero(p)}) {
        const double defect = commutator_defect(p, w);
        if (s == 0.0) {
          on_line = std::max(on_line, defect);
        } else if (std::abs(s) > 0.01) {
          off_line = std::min(off_line, defect);
        }
      }
    }
    check.at_most("[H, H_D] = 0 on lambda = -beta", on_line, 1e-14);
    check.at_least("[H, H_D] != 0 off lambda = -beta", off_line, 1e-6);
  }

  return VerifyReport{check.take()};
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": observed " << format_number(c.observed)
        << (c.lower_bound ? ", required > " : ", required <= ") << format_number(c.bound) << '\n';
  }
  out << (report.checks.size() - report.failures()) << '/' << report.checks.size()
      << " checks passed\n";
}

Document report_document(const VerifyReport& report) {
  Document doc;
  doc.json = Json{{"command", "verify"}, {"passed", report.all_passed()}};
  Json checks = Json::array();
  Table table{"verify", {"check", "passed", "observed", "bound", "bound_kind"}, {}};
  for (const auto& c : report.checks) {
    const std::string kind = c.lower_bound ? "greater" : "at_most";
    checks.push_back(Json{{"check", c.name},
                          {"passed", c.passed},
                          {"observed", c.observed},
                          {"bound", c.bound},
                          {"bound_kind", kind}});
    table.rows.push_back({c.name, c.passed, c.observed, c.bound, kind});
  }
  doc.json["checks"] = checks;
  doc.tables = {std::move(table)};
  return doc;
}

}  // namespace nhho::cli
