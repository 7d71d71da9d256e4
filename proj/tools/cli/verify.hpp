#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cli/output.hpp"

namespace nhho::cli {

enum class Fault {
  kNone,
  // Flips the sign of the 2(lambda + beta) term in V. Negative control only.
  kFlipVSign,
};

struct VerifyOptions {
  std::size_t orders = 10;
  std::size_t samples = 20;
  std::uint64_t seed = 20150723;
  Fault fault = Fault::kNone;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double bound = 0.0;
  bool lower_bound = false;  // observed must exceed bound instead of staying below
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

VerifyReport run_verify(const VerifyOptions& options);

// One "PASS"/"FAIL" line per check plus a summary line.
void print_report(const VerifyReport& report, std::ostream& out);

Document report_document(const VerifyReport& report);

}  // namespace nhho::cli
