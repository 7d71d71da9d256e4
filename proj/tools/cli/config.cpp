#include "cli/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace nhho::cli {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::kU0: return "u0";
    case Branch::kV0: return "v0";
    case Branch::kVariational: return "variational";
    case Branch::kCustom: return "custom";
  }
  return "unknown";
}

void validate(const RunConfig& config, bool embeds_series) {
  if (auto err = TransformParams::check(config.lambda, config.beta)) throw UsageError(*err);
  if (config.branch == Branch::kCustom) {
    if (!config.omega) throw UsageError("branch custom requires --omega");
    if (!(*config.omega > 0.0)) throw UsageError("omega must be positive");
  } else if (config.omega) {
    throw UsageError("--omega is only accepted with --branch custom");
  }
  if (config.order < 1) throw UsageError("order must be at least 1");
  if (config.dim < 1) throw UsageError("dim must be at least 1");
  if (embeds_series && config.dim < config.n + 2 * config.order + 3) {
    std::ostringstream os;
    os << "dim too small: require dim >= n + 2*order + 3 = " << config.n + 2 * config.order + 3
       << " (got " << config.dim << ")";
    throw UsageError(os.str());
  }
  if (config.grid.points < 2) throw UsageError("grid points must be at least 2");
  if (config.grid.min && config.grid.max && !(*config.grid.min < *config.grid.max)) {
    throw UsageError("grid min must be below grid max");
  }
}

TransformParams params_of(const RunConfig& config) {
  return TransformParams(config.lambda, config.beta);
}

double selected_omega(const RunConfig& config) {
  const auto params = params_of(config);
  switch (config.branch) {
    case Branch::kU0: return omega_u_zero(params);
    case Branch::kV0: return omega_v_zero(params);
    case Branch::kVariational: return omega_variational(params);
    case Branch::kCustom: return config.omega.value();
  }
  return 1.0;
}

std::string resolve_output_path(const std::string& output) {
  if (output.empty()) return output;
  const std::filesystem::path p(output);
  if (p.is_absolute()) return output;
  if (const char* dir = std::getenv("NHHO_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
    return (std::filesystem::path(dir) / p).string();
  }
  return output;
}

}  // namespace nhho::cli
