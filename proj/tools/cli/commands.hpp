#pragma once

#include <cstddef>

#include "cli/config.hpp"
#include "cli/output.hpp"

namespace nhho::cli {

Document cmd_analyze(const RunConfig& config);

// Requires branch u0 or v0; throws UsageError otherwise.
Document cmd_spectrum(const RunConfig& config);

// Requires branch u0 (raising series to `order`) or v0 (finite lowering series).
Document cmd_wavefunction(const RunConfig& config);

struct SweepSpec {
  double lambda_min = -0.8;
  double lambda_max = 0.8;
  std::size_t lambda_steps = 5;
  double beta_min = -0.8;
  double beta_max = 0.8;
  std::size_t beta_steps = 5;
  std::size_t max_level = 10;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Rows are lambda-major regardless of evaluation order.
Document cmd_sweep(const RunConfig& config, const SweepSpec& sweep);

}  // namespace nhho::cli
