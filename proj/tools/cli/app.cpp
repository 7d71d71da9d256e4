#include "cli/app.hpp"

#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/output.hpp"
#include "cli/verify.hpp"
#include "nhho/error.hpp"

namespace nhho::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transformed non-Hermitian harmonic oscillator: spectra, series and checks", "nhho"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a key=value file (flags take precedence)");

  RunConfig config;
  double omega = 0.0;
  double grid_min = 0.0;
  double grid_max = 0.0;

  const std::map<std::string, Branch> branches = {
      {"u0", Branch::kU0}, {"v0", Branch::kV0}, {"variational", Branch::kVariational}, {"custom", Branch::kCustom}};
  const std::map<std::string, Format> formats = {{"json", Format::kJson}, {"csv", Format::kCsv}};

  app.add_option("--lambda", config.lambda, "Transformation parameter lambda, |lambda| < 1");
  app.add_option("--beta", config.beta, "Transformation parameter beta, |beta| < 1");
  app.add_option("-n,--n", config.n, "Level index");
  app.add_option("-K,--order", config.order, "Perturbation / series order")->capture_default_str();
  app.add_option("-N,--dim", config.dim, "Fock truncation size")->capture_default_str();
  std::string branch_name = "u0";
  std::string format_name = "json";
  app.add_option("--branch", branch_name, "Frequency branch: u0, v0, variational, custom")
      ->check(CLI::IsMember(branches, CLI::ignore_case));
  auto* omega_opt = app.add_option("--omega", omega, "Frequency for --branch custom");
  auto* gmin_opt = app.add_option("--grid-min", grid_min, "Grid lower end (default -8/sqrt(omega))");
  auto* gmax_opt = app.add_option("--grid-max", grid_max, "Grid upper end (default 8/sqrt(omega))");
  app.add_option("--grid-points", config.grid.points, "Grid sample count")->capture_default_str();
  app.add_option("--format", format_name, "Output format: json or csv")
      ->check(CLI::IsMember(formats, CLI::ignore_case));
  app.add_option("-o,--output", config.output, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Frequencies, decomposition and structural checks");
  auto* spectrum = app.add_subcommand("spectrum", "Triangular spectrum on the u0 / v0 branch");
  auto* wavefunction = app.add_subcommand("wavefunction", "Series coefficients and position-space samples");

  auto* verify = app.add_subcommand("verify", "Run every built-in identity check");
  VerifyOptions verify_options;
  std::string fault;
  verify->add_option("--orders", verify_options.orders, "Perturbation order to check")->capture_default_str();
  verify->add_option("--samples", verify_options.samples, "Random parameter points")->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Sample seed")->capture_default_str();
  verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"none", "v-sign"}));

  auto* sweep = app.add_subcommand("sweep", "Grid over (lambda, beta)");
  SweepSpec sweep_spec;
  sweep->add_option("--lambda-min", sweep_spec.lambda_min)->capture_default_str();
  sweep->add_option("--lambda-max", sweep_spec.lambda_max)->capture_default_str();
  sweep->add_option("--lambda-steps", sweep_spec.lambda_steps)->capture_default_str();
  sweep->add_option("--beta-min", sweep_spec.beta_min)->capture_default_str();
  sweep->add_option("--beta-max", sweep_spec.beta_max)->capture_default_str();
  sweep->add_option("--beta-steps", sweep_spec.beta_steps)->capture_default_str();
  sweep->add_option("--max-level", sweep_spec.max_level, "Levels 0..max checked per point")->capture_default_str();
  sweep->add_option("--threads", sweep_spec.threads, "Worker threads (0: all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  config.branch = branches.at(CLI::detail::to_lower(branch_name));
  config.format = formats.at(CLI::detail::to_lower(format_name));
  if (omega_opt->count() > 0) config.omega = omega;
  if (gmin_opt->count() > 0) config.grid.min = grid_min;
  if (gmax_opt->count() > 0) config.grid.max = grid_max;

  try {
    if (*verify) {
      verify_options.fault = fault == "v-sign" ? Fault::kFlipVSign : Fault::kNone;
      const auto report = run_verify(verify_options);
      print_report(report, out);
      if (!config.output.empty()) emit(report_document(report), config.format, config.output, out);
      return report.all_passed() ? kExitOk : kExitVerificationFailed;
    }
    Document doc;
    if (*analyze) {
      doc = cmd_analyze(config);
    } else if (*spectrum) {
      doc = cmd_spectrum(config);
    } else if (*wavefunction) {
      doc = cmd_wavefunction(config);
    } else if (*sweep) {
      doc = cmd_sweep(config, sweep_spec);
    }
    emit(doc, config.format, config.output, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace nhho::cli
