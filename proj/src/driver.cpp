#include "gencospark/driver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gencospark/cospark.hpp"
#include "gencospark/errors.hpp"
#include "gencospark/oracle.hpp"
#include "gencospark/pattern.hpp"
#include "gencospark/rng.hpp"

namespace gencospark {

namespace {

// Salts for the per-trial seed streams.
enum : std::uint64_t { kPatternSalt = 0, kRealizeSalt = 1, kRetrySalt = 2 };

long long elapsed_us(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

VerifyReport run_verify(const VerifyParams& params) {
  if (params.rows > kOracleMaxRows) {
    throw SizeGuardError("verify needs the brute-force oracles; rows must be "
                         "at most " +
                         std::to_string(kOracleMaxRows));
  }
  VerifyReport report;
  report.params = params;
  for (int t = 0; t < params.trials; ++t) {
    const auto trial_id = static_cast<std::uint64_t>(t);
    SparsityPattern pattern =
        random_pattern(params.rows, params.cols, params.density,
                       derive_seed(params.seed, {trial_id, kPatternSalt}));
    const CosparkResult alg = generic_cospark(pattern);
    const BruteCosparkPattern by_pattern = brute_generic_cospark(pattern);
    const CosparkWitness by_matrix = brute_cospark(
        realize(pattern, derive_seed(params.seed, {trial_id, kRealizeSalt})));

    VerifyTrial trial;
    trial.index = t;
    trial.nnz = pattern.nnz();
    trial.deficient = alg.deficient;
    trial.algorithm_value = alg.value;
    trial.brute_pattern_value = by_pattern.value;
    trial.brute_numeric_first = by_matrix.value;
    trial.brute_numeric_value = by_matrix.value;
    if (!alg.deficient && by_matrix.value != alg.value) {
      // A discrete realization can land on a measure-zero degeneracy; one
      // fresh draw separates bad luck from an actual bug.
      trial.numeric_retried = true;
      trial.brute_numeric_value =
          brute_cospark(
              realize(pattern, derive_seed(params.seed, {trial_id, kRetrySalt})))
              .value;
    }
    trial.agree_pattern = trial.brute_pattern_value == alg.value;
    trial.agree_numeric = trial.brute_numeric_value == alg.value;
    report.all_agree =
        report.all_agree && trial.agree_pattern && trial.agree_numeric;
    report.trials.push_back(trial);
  }
  return report;
}

std::string SweepLevel::mean_value() const {
  const long long count = trials - deficient_skips;
  if (count <= 0) return "n/a";
  using boost::multiprecision::cpp_int;
  cpp_int num = value_sum;
  cpp_int den = count;
  const cpp_int g = gcd(num, den);
  num /= g;
  den /= g;
  std::ostringstream out;
  out << num;
  if (den != 1) out << '/' << den;
  return out.str();
}

SweepReport run_sweep(const SweepParams& params) {
  if (params.oracle && params.rows > kOracleMaxRows) {
    throw SizeGuardError("sweep with the oracle enabled requires rows <= " +
                         std::to_string(kOracleMaxRows) +
                         "; pass --no-oracle for larger instances");
  }
  SweepReport report;
  report.params = params;
  for (int level = 1; level <= params.levels; ++level) {
    SweepLevel record;
    record.level = level;
    record.density = params.density_override
                         ? *params.density_override
                         : static_cast<double>(level) / (params.levels + 1);
    for (int t = 0; t < params.per_level; ++t) {
      const auto level_id = static_cast<std::uint64_t>(level);
      const auto trial_id = static_cast<std::uint64_t>(t);
      SparsityPattern pattern = random_pattern(
          params.rows, params.cols, record.density,
          derive_seed(params.seed, {level_id, trial_id, kPatternSalt}));

      const auto start = std::chrono::steady_clock::now();
      const CosparkResult alg = generic_cospark(pattern);
      record.runtime_us += elapsed_us(start);
      ++record.trials;

      if (alg.deficient) {
        ++record.deficient_skips;
        continue;
      }
      record.value_sum += alg.value;
      if (!params.oracle) continue;

      int oracle_value =
          brute_cospark(realize(pattern, derive_seed(params.seed,
                                                     {level_id, trial_id,
                                                      kRealizeSalt})))
              .value;
      if (oracle_value != alg.value) {
        ++record.retried;
        oracle_value =
            brute_cospark(realize(pattern, derive_seed(params.seed,
                                                       {level_id, trial_id,
                                                        kRetrySalt})))
                .value;
      }
      if (oracle_value == alg.value) {
        ++record.matches;
      } else {
        ++record.mismatches;
      }
    }
    report.total_mismatches += record.mismatches;
    report.levels.push_back(record);
  }
  return report;
}

void print_table(const VerifyReport& report, std::ostream& out) {
  const auto& p = report.params;
  out << "verify: " << p.rows << " x " << p.cols << ", density "
      << std::fixed << std::setprecision(4) << p.density << ", seed " << p.seed
      << "\n";
  out << std::setw(5) << "trial" << std::setw(6) << "nnz" << std::setw(11)
      << "spcospark" << std::setw(10) << "brute_sp" << std::setw(11)
      << "brute_num" << std::setw(12) << "status" << "\n";
  for (const auto& t : report.trials) {
    std::string status = "ok";
    if (!t.agree_pattern || !t.agree_numeric) {
      status = "MISMATCH";
    } else if (t.deficient) {
      status = "deficient";
    } else if (t.numeric_retried) {
      status = "ok(retry)";
    }
    out << std::setw(5) << t.index << std::setw(6) << t.nnz << std::setw(11)
        << t.algorithm_value << std::setw(10) << t.brute_pattern_value
        << std::setw(11) << t.brute_numeric_value << std::setw(12) << status
        << "\n";
  }
  int agreed = 0;
  for (const auto& t : report.trials) {
    if (t.agree_pattern && t.agree_numeric) ++agreed;
  }
  out << "agreement: " << agreed << "/" << report.trials.size() << "\n";
}

void print_table(const SweepReport& report, std::ostream& out) {
  const auto& p = report.params;
  out << "sweep: " << p.rows << " x " << p.cols << ", " << p.levels
      << " levels x " << p.per_level << " trials, seed " << p.seed
      << (p.oracle ? "" : ", oracle off") << "\n";
  out << std::setw(9) << "density" << std::setw(8) << "trials" << std::setw(9)
      << "matches" << std::setw(12) << "mismatches" << std::setw(11)
      << "deficient" << std::setw(16) << "mean_spcospark" << std::setw(10)
      << "mean_ms" << "\n";
  long long total_trials = 0;
  long long total_deficient = 0;
  for (const auto& lvl : report.levels) {
    total_trials += lvl.trials;
    total_deficient += lvl.deficient_skips;
    out << std::setw(9) << std::fixed << std::setprecision(4) << lvl.density
        << std::setw(8) << lvl.trials << std::setw(9) << lvl.matches
        << std::setw(12) << lvl.mismatches << std::setw(11)
        << lvl.deficient_skips << std::setw(16) << lvl.mean_value()
        << std::setw(10) << std::fixed << std::setprecision(3)
        << (lvl.trials > 0
                ? static_cast<double>(lvl.runtime_us) / lvl.trials / 1000.0
                : 0.0)
        << "\n";
  }
  out << "total: " << total_trials << " trials, " << report.total_mismatches
      << " mismatches, " << total_deficient << " deficient\n";
}

nlohmann::json to_json(const VerifyReport& report) {
  const auto& p = report.params;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& t : report.trials) {
    records.push_back({{"trial", t.index},
                       {"nnz", t.nnz},
                       {"deficient", t.deficient},
                       {"spcospark", t.algorithm_value},
                       {"brute_spcospark", t.brute_pattern_value},
                       {"brute_cospark", t.brute_numeric_value},
                       {"brute_cospark_first", t.brute_numeric_first},
                       {"retried", t.numeric_retried},
                       {"agree", t.agree_pattern && t.agree_numeric}});
  }
  return {{"command", "verify"}, {"rows", p.rows},
          {"cols", p.cols},      {"density", p.density},
          {"trials", p.trials},  {"seed", p.seed},
          {"all_agree", report.all_agree}, {"records", records}};
}

nlohmann::json to_json(const SweepReport& report) {
  const auto& p = report.params;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lvl : report.levels) {
    levels.push_back(
        {{"level", lvl.level},
         {"density", lvl.density},
         {"trials", lvl.trials},
         {"matches", lvl.matches},
         {"mismatches", lvl.mismatches},
         {"deficient", lvl.deficient_skips},
         {"retried", lvl.retried},
         {"mean_spcospark", lvl.mean_value()},
         {"mean_runtime_us",
          lvl.trials > 0 ? lvl.runtime_us / lvl.trials : 0}});
  }
  return {{"command", "sweep"},
          {"rows", p.rows},
          {"cols", p.cols},
          {"levels", p.levels},
          {"per_level", p.per_level},
          {"seed", p.seed},
          {"oracle", p.oracle},
          {"total_mismatches", report.total_mismatches},
          {"levels_data", levels}};
}

}  // namespace gencospark
