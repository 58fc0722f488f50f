#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace csq {

// One named invariant check: a measured defect against its tolerance.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Runs the cross-module invariant suite (Gram and resolution defects,
// stochasticity, Pauli reassembly, round trips, ladder laws, symbol
// sandwiches) on seeded inputs.  tol_override, when set, replaces every
// per-check tolerance.  Deterministic per seed.
VerifyReport run_verification(std::uint64_t seed,
                              std::optional<double> tol_override = std::nullopt);

// Fixed-format text table; byte-identical across runs for a fixed seed.
std::string format_report(const VerifyReport& report, std::uint64_t seed);

}  // namespace csq
