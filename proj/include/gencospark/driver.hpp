#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gencospark {

// Trial runners behind the `verify` and `sweep` CLI commands. They live in
// the library so tests can drive them directly; the CLI only parses flags
// and renders.

struct VerifyParams {
  int rows = 12;
  int cols = 4;
  double density = 0.4;
  int trials = 20;
  std::uint64_t seed = 1;
};

struct VerifyTrial {
  int index = 0;
  int nnz = 0;
  bool deficient = false;
  int algorithm_value = 0;       // matching-based algorithm
  int brute_pattern_value = 0;   // combinatorial oracle
  int brute_numeric_value = 0;   // numeric oracle on a realization
  bool numeric_retried = false;  // a fresh realization was drawn once
  int brute_numeric_first = 0;   // pre-retry value (== final unless retried)
  bool agree_pattern = false;
  bool agree_numeric = false;
};

struct VerifyReport {
  VerifyParams params;
  std::vector<VerifyTrial> trials;
  bool all_agree = true;
};

VerifyReport run_verify(const VerifyParams& params);

struct SweepParams {
  int rows = 20;
  int cols = 5;
  int levels = 10;
  int per_level = 50;
  std::uint64_t seed = 42;
  bool oracle = true;
  // Test hook: overrides the k/(levels+1) grid with one fixed density.
  std::optional<double> density_override;
};

struct SweepLevel {
  int level = 0;             // 1-based k; density = k/(levels+1)
  double density = 0.0;
  int trials = 0;
  int matches = 0;
  int mismatches = 0;
  int deficient_skips = 0;
  int retried = 0;
  long long value_sum = 0;   // sum of cospark values over non-deficient trials
  long long runtime_us = 0;  // total Algorithm-1 time, monotonic clock
  std::string mean_value() const;  // exact fraction "sum/count", "n/a" if none
};

struct SweepReport {
  SweepParams params;
  std::vector<SweepLevel> levels;
  int total_mismatches = 0;
};

SweepReport run_sweep(const SweepParams& params);

// Rendering. JSON output is schema-stable; runtime fields are telemetry and
// the only part that varies between identical-seed runs.
void print_table(const VerifyReport& report, std::ostream& out);
void print_table(const SweepReport& report, std::ostream& out);
nlohmann::json to_json(const VerifyReport& report);
nlohmann::json to_json(const SweepReport& report);

}  // namespace gencospark
