#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "nhho/lie_closed_form.hpp"
#include "nhho/perturbation.hpp"
#include "nhho/position_space.hpp"
#include "nhho/spectral.hpp"

namespace nhho::cli {
namespace {

double canonical_deviation(const TransformParams& params, double omega) {
  const auto c = verify_canonical_commutator(params, omega);
  return (c - LadderPolynomial::scalar(Complex{0.0, 1.0})).max_abs_coefficient();
}

Json decomposition_json(std::string_view branch, const ModeDecomposition& d) {
  return Json{{"branch", branch}, {"omega", d.omega}, {"h_d", d.h_d}, {"U", d.u}, {"V", d.v}};
}

std::vector<Cell> decomposition_row(std::string_view branch, const ModeDecomposition& d) {
  return {std::string(branch), d.omega, d.h_d, d.u, d.v};
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  if (steps == 1) return {lo};
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    // Mirror-exact on symmetric ranges, so lambda = -beta grid points hit f = 0.
    const double a = static_cast<double>(steps - 1 - i);
    const double b = static_cast<double>(i);
    out[i] = (a * lo + b * hi) / static_cast<double>(steps - 1);
  }
  return out;
}

}  // namespace

Document cmd_analyze(const RunConfig& config) {
  validate(config);
  const auto params = params_of(config);
  const double w1 = omega_u_zero(params);
  const double w2 = omega_v_zero(params);
  const double wv = omega_variational(params);
  const double w = selected_omega(config);
  const auto ru = frequency_roots(params, ZeroBranch::kUZero);
  const auto rv = frequency_roots(params, ZeroBranch::kVZero);
  const auto selected = build_hamiltonian(params, w);
  const double herm = hermiticity_defect(params, w).max_abs_coefficient();
  const double canon = canonical_deviation(params, w);
  const bool canon_ok = canon <= 1e-14;

  std::vector<std::pair<std::string, ModeDecomposition>> decomps = {
      {"u0", build_hamiltonian(params, w1)},
      {"v0", build_hamiltonian(params, w2)},
      {"variational", build_hamiltonian(params, wv)},
  };
  if (config.branch == Branch::kCustom) decomps.emplace_back("custom", selected);

  Document doc;
  doc.json = Json{{"command", "analyze"},
                  {"lambda", config.lambda},
                  {"beta", config.beta},
                  {"f", params.coupling()},
                  {"branch", to_string(config.branch)},
                  {"omega", w},
                  {"omega_u_zero", w1},
                  {"omega_v_zero", w2},
                  {"omega_variational", wv},
                  {"u_zero_roots", {{"positive", ru.positive}, {"negative", ru.negative}}},
                  {"v_zero_roots", {{"positive", rv.positive}, {"negative", rv.negative}}},
                  {"h_d", selected.h_d},
                  {"U", selected.u},
                  {"V", selected.v},
                  {"hermiticity_defect", herm},
                  {"canonical_commutator", {{"max_deviation", canon}, {"pass", canon_ok}}}};
  Json list = Json::array();
  for (const auto& [name, d] : decomps) list.push_back(decomposition_json(name, d));
  doc.json["decompositions"] = list;

  Table summary{"summary", {"quantity", "value"}, {}};
  auto add = [&](const char* key, Cell v) { summary.rows.push_back({std::string(key), std::move(v)}); };
  add("lambda", config.lambda);
  add("beta", config.beta);
  add("f", params.coupling());
  add("branch", std::string(to_string(config.branch)));
  add("omega", w);
  add("omega_u_zero", w1);
  add("omega_v_zero", w2);
  add("omega_variational", wv);
  add("u_zero_root_positive", ru.positive);
  add("u_zero_root_negative", ru.negative);
  add("v_zero_root_positive", rv.positive);
  add("v_zero_root_negative", rv.negative);
  add("h_d", selected.h_d);
  add("U", selected.u);
  add("V", selected.v);
  add("hermiticity_defect", herm);
  add("canonical_commutator_deviation", canon);
  add("canonical_commutator_pass", canon_ok);

  Table table{"decompositions", {"branch", "omega", "h_d", "U", "V"}, {}};
  for (const auto& [name, d] : decomps) table.rows.push_back(decomposition_row(name, d));
  doc.tables = {std::move(summary), std::move(table)};
  return doc;
}

Document cmd_spectrum(const RunConfig& config) {
  validate(config);
  if (config.branch != Branch::kU0 && config.branch != Branch::kV0) {
    throw UsageError("spectrum extraction requires triangular branch (u0 or v0)");
  }
  const auto params = params_of(config);
  const auto branch = config.branch == Branch::kU0 ? ZeroBranch::kUZero : ZeroBranch::kVZero;
  // Reduced branch form (h_d = 1/2, one of U, V identically zero), plus the
  // same read-off from the general closed form evaluated at the branch omega.
  const auto decomp = branch_hamiltonian(params, branch);
  const auto m = hamiltonian_matrix(decomp, config.dim);
  const auto tag = classify_structure(m);
  const auto spectrum = triangular_spectrum(m);
  const auto general = triangular_spectrum(
      hamiltonian_matrix(build_hamiltonian(params, decomp.omega), config.dim));
  double general_dev = 0.0;
  for (std::size_t i = 0; i < general.size(); ++i) {
    general_dev = std::max(general_dev, std::abs(general[i] - (static_cast<double>(i) + 0.5)));
  }

  Document doc;
  doc.json = Json{{"command", "spectrum"},
                  {"lambda", config.lambda},
                  {"beta", config.beta},
                  {"branch", to_string(config.branch)},
                  {"omega", decomp.omega},
                  {"dim", config.dim},
                  {"structure", to_string(tag)},
                  {"general_form_max_deviation", general_dev}};
  Json levels = Json::array();
  Table table{"spectrum", {"n", "eigenvalue", "deviation", "structure"}, {}};
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double dev = spectrum[i] - (static_cast<double>(i) + 0.5);
    levels.push_back(Json{{"n", i}, {"eigenvalue", spectrum[i]}, {"deviation", dev}});
    table.rows.push_back({static_cast<long long>(i), spectrum[i], dev, std::string(to_string(tag))});
  }
  doc.json["levels"] = levels;
  doc.tables = {std::move(table)};
  return doc;
}

Document cmd_wavefunction(const RunConfig& config) {
  validate(config, true);
  if (config.branch != Branch::kU0 && config.branch != Branch::kV0) {
    throw UsageError("wavefunction series requires branch u0 or v0");
  }
  const auto params = params_of(config);
  const bool raising = config.branch == Branch::kU0;
  const auto closed = raising ? build_series_raising(params, config.n, config.order)
                              : build_series_lowering(params, config.n);
  const auto recursed = raising ? recurse_series_raising(params, config.n, config.order)
                                : recurse_series_lowering(params, config.n);
  const double f = params.coupling();

  Document doc;
  doc.json = Json{{"command", "wavefunction"},
                  {"lambda", config.lambda},
                  {"beta", config.beta},
                  {"branch", to_string(config.branch)},
                  {"series", raising ? "raising" : "lowering"},
                  {"n", config.n},
                  {"omega", closed.omega},
                  {"f", f}};

  // f^k sqrt(ratio) / c_k recovers the 2^k k! denominators.
  Table coeffs{"coefficients", {"k", "level", "closed_form", "recursion", "denominator"}, {}};
  Json coeff_json = Json::array();
  for (std::size_t k = 0; k < closed.coeffs.size(); ++k) {
    const std::size_t level = closed.level(k);
    const double ratio = raising ? std::sqrt(std::tgamma(level + 1.0) / std::tgamma(config.n + 1.0))
                                 : std::sqrt(std::tgamma(config.n + 1.0) / std::tgamma(level + 1.0));
    const double denom = closed.coeffs[k] != 0.0
                             ? std::pow(f, static_cast<double>(k)) * ratio / closed.coeffs[k]
                             : std::nan("");
    coeffs.rows.push_back({static_cast<long long>(k), static_cast<long long>(level),
                           closed.coeffs[k], recursed.coeffs[k], denom});
    coeff_json.push_back(Json{{"k", k},
                              {"level", level},
                              {"closed_form", closed.coeffs[k]},
                              {"recursion", recursed.coeffs[k]},
                              {"denominator", denom}});
  }
  doc.json["coefficients"] = coeff_json;

  const auto decomp = build_hamiltonian(params, closed.omega);
  const auto residual = eigen_residual(hamiltonian_matrix(decomp, config.dim), closed,
                                       static_cast<double>(config.n) + 0.5);
  doc.json["dim"] = config.dim;
  doc.json["residual"] = Json{{"interior", residual.interior}, {"boundary", residual.boundary}};

  const double half = default_grid_half_width(closed.omega);
  const double xmin = config.grid.min.value_or(-half);
  const double xmax = config.grid.max.value_or(half);
  const auto expansion = HermiteExpansion::from_series(closed);
  const HermiteBasisFunction base{config.n, closed.omega};
  const auto series_grid = sample_grid(expansion, xmin, xmax, config.grid.points);
  const auto base_grid =
      sample_grid([&](double x) { return eval_basis(base, x); }, xmin, xmax, config.grid.points);

  Table grid{"grid", {"x", "series", "basis"}, {}};
  Json xs = Json::array();
  Json series_values = Json::array();
  Json basis_values = Json::array();
  for (std::size_t i = 0; i < series_grid.xs.size(); ++i) {
    grid.rows.push_back({series_grid.xs[i], series_grid.values[i], base_grid.values[i]});
    xs.push_back(series_grid.xs[i]);
    series_values.push_back(series_grid.values[i]);
    basis_values.push_back(base_grid.values[i]);
  }
  doc.json["grid"] = Json{{"x", xs}, {"series", series_values}, {"basis", basis_values}};
  Table residual_table{"residual", {"dim", "interior", "boundary"},
                       {{static_cast<long long>(config.dim), residual.interior, residual.boundary}}};
  doc.tables = {std::move(coeffs), std::move(residual_table), std::move(grid)};
  return doc;
}

Document cmd_sweep(const RunConfig& config, const SweepSpec& sweep) {
  if (sweep.lambda_steps < 1 || sweep.beta_steps < 1) throw UsageError("sweep needs at least one step per axis");
  if (sweep.lambda_min > sweep.lambda_max || sweep.beta_min > sweep.beta_max) {
    throw UsageError("sweep range min must not exceed max");
  }
  for (double v : {sweep.lambda_min, sweep.lambda_max}) {
    if (auto err = TransformParams::check(v, 0.0)) throw UsageError(*err);
  }
  for (double v : {sweep.beta_min, sweep.beta_max}) {
    if (auto err = TransformParams::check(0.0, v)) throw UsageError(*err);
  }
  if (config.order < 1) throw UsageError("order must be at least 1");

  const auto lambdas = linspace(sweep.lambda_min, sweep.lambda_max, sweep.lambda_steps);
  const auto betas = linspace(sweep.beta_min, sweep.beta_max, sweep.beta_steps);
  const std::size_t total = lambdas.size() * betas.size();

  struct Row {
    double lambda, beta, w1, w2, f, max_u0, max_v0, expectation;
  };
  std::vector<Row> rows(total);

  auto evaluate = [&](std::size_t idx) {
    const double l = lambdas[idx / betas.size()];
    const double b = betas[idx % betas.size()];
    const TransformParams params(l, b);
    Row r{l, b, omega_u_zero(params), omega_v_zero(params), params.coupling(), 0.0, 0.0, 0.0};
    const auto d1 = build_hamiltonian(params, r.w1);
    const auto d2 = build_hamiltonian(params, r.w2);
    for (std::size_t n = 0; n <= sweep.max_level; ++n) {
      r.max_u0 = std::max(r.max_u0, rs_corrections(d1, n, config.order).max_abs_correction());
      r.max_v0 = std::max(r.max_v0, rs_corrections(d2, n, config.order).max_abs_correction());
      r.expectation = std::max(r.expectation, expectation_consistency(params, n, config.order)
                                                  .max_deviation(static_cast<double>(n) + 0.5));
    }
    rows[idx] = r;
  };

  unsigned workers = sweep.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                        : sweep.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) evaluate(i);
    });
  }
  pool.clear();

  Document doc;
  doc.json = Json{{"command", "sweep"}, {"order", config.order}, {"max_level", sweep.max_level}};
  Table table{"sweep",
              {"lambda", "beta", "omega_u_zero", "omega_v_zero", "f", "max_correction_u0",
               "max_correction_v0", "expectation_max_deviation"},
              {}};
  Json points = Json::array();
  for (const auto& r : rows) {
    table.rows.push_back({r.lambda, r.beta, r.w1, r.w2, r.f, r.max_u0, r.max_v0, r.expectation});
    points.push_back(Json{{"lambda", r.lambda},
                          {"beta", r.beta},
                          {"omega_u_zero", r.w1},
                          {"omega_v_zero", r.w2},
                          {"f", r.f},
                          {"max_correction_u0", r.max_u0},
                          {"max_correction_v0", r.max_v0},
                          {"expectation_max_deviation", r.expectation}});
  }
  doc.json["points"] = points;
  doc.tables = {std::move(table)};
  return doc;
}

}  // namespace nhho::cli
