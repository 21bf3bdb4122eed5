#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace nested2 {

struct StressConfig {
  long count = 1000;
  int max_rows = 6;
  int max_cols = 6;
  std::uint64_t seed = 1;
};

struct StressStats {
  long instances = 0;
  long accepts = 0;
  long rejects = 0;
  long mismatches = 0;
  long cert_failures = 0;
};

struct StressReport {
  std::map<std::string, StressStats> by_kind;
  std::optional<std::string> first_failure_description;
  std::optional<std::string> first_failure_instance;  // serialized matrix or graph

  long total_mismatches() const;
  long total_cert_failures() const;
  bool ok() const { return total_mismatches() == 0 && total_cert_failures() == 0; }
};

/// Seeded generate-recognize-compare-verify loop: recognizers against the
/// brute-force oracles, every certificate revalidated and round-tripped,
/// plus the crossing-pair entry property on each C1P-ordered instance.
/// Bounds must stay inside the oracle guards.
StressReport run_stress(const StressConfig& config);

}  // namespace nested2
