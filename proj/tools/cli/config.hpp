#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nhho/hamiltonian.hpp"

namespace nhho::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;

// Invalid user input; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Branch { kU0, kV0, kVariational, kCustom };
enum class Format { kJson, kCsv };

std::string_view to_string(Branch b);

struct GridSpec {
  std::optional<double> min;
  std::optional<double> max;
  std::size_t points = 401;
};

struct RunConfig {
  double lambda = 0.0;
  double beta = 0.0;
  std::size_t n = 0;
  std::size_t order = 10;
  std::size_t dim = 64;
  Branch branch = Branch::kU0;
  std::optional<double> omega;
  GridSpec grid;
  Format format = Format::kJson;
  std::string output;  // empty: stdout
};

// Throws UsageError naming the violated invariant. The n + 2K + 3 dimension
// guard applies only where a series is embedded into the truncation.
void validate(const RunConfig& config, bool embeds_series = false);

TransformParams params_of(const RunConfig& config);

// Frequency selected by the configured branch.
double selected_omega(const RunConfig& config);

// Resolves `output` against $NHHO_OUTPUT_DIR when it is a relative path.
std::string resolve_output_path(const std::string& output);

}  // namespace nhho::cli
