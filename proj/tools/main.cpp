// Command-line front end: compute, gen, verify, sweep.
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 size-guard refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencospark/cospark.hpp"
#include "gencospark/driver.hpp"
#include "gencospark/errors.hpp"
#include "gencospark/matrix_market.hpp"
#include "gencospark/oracle.hpp"
#include "gencospark/pattern.hpp"

namespace {

using namespace gencospark;

int cmd_compute(const std::string& file, bool json, bool diagnostics,
                std::optional<std::uint64_t> order_seed) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open '" << file << "'\n";
    return 2;
  }
  SparsityPattern pattern = [&] {
    try {
      return read_pattern(in);
    } catch (const ParseError& e) {
      std::cerr << file << ": " << e.what() << "\n";
      throw CLI::RuntimeError(2);
    }
  }();

  CosparkOptions options;
  options.order_seed = order_seed;
  options.diagnostics = diagnostics;
  const CosparkResult result = generic_cospark(pattern, options);

  if (json) {
    nlohmann::json x_f = nlohmann::json::array();
    for (int row : result.witness_rows) x_f.push_back(row + 1);
    nlohmann::json out = {{"m", pattern.rows()},   {"n", pattern.cols()},
                          {"nnz", pattern.nnz()},  {"spcospark", result.value},
                          {"x_f", x_f},            {"deficient", result.deficient}};
    if (diagnostics) {
      nlohmann::json per_w = nlohmann::json::array();
      for (const auto& d : result.per_column) {
        per_w.push_back({{"excluded_col", d.excluded_col + 1},
                         {"x_w", d.seed_rows},
                         {"b", d.added_rows},
                         {"x_bar", d.total_rows}});
      }
      out["per_w"] = per_w;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "spcospark = " << result.value
              << (result.deficient ? " (deficient)" : "") << "\n";
    std::cout << "|X_f| = " << result.witness_rows.size() << "\n";
    std::cout << "X_f =";
    for (int row : result.witness_rows) std::cout << ' ' << row + 1;
    std::cout << "\n";
    if (diagnostics) {
      std::cout << "excluded_col |X_W| |B| |X_bar|\n";
      for (const auto& d : result.per_column) {
        std::cout << d.excluded_col + 1 << ' ' << d.seed_rows << ' '
                  << d.added_rows << ' ' << d.total_rows << "\n";
      }
    }
  }
  return 0;
}

int cmd_gen(int rows, int cols, double density, std::uint64_t seed,
            const std::string& out_path) {
  const SparsityPattern pattern = random_pattern(rows, cols, density, seed);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  write_pattern(pattern, out);
  if (!out.good()) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return 2;
  }
  std::cout << "nnz = " << pattern.nnz() << "\n";
  return 0;
}

int cmd_verify(const VerifyParams& params, bool json) {
  const VerifyReport report = run_verify(params);
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    print_table(report, std::cout);
  }
  return report.all_agree ? 0 : 1;
}

int cmd_sweep(const SweepParams& params, bool json) {
  const SweepReport report = run_sweep(params);
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    print_table(report, std::cout);
  }
  return report.total_mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic cospark of sparse matrix patterns"};
  app.require_subcommand(1);

  // compute
  std::string compute_file;
  bool compute_json = false;
  bool compute_diag = false;
  std::optional<std::uint64_t> compute_order_seed;
  auto* compute = app.add_subcommand(
      "compute", "Compute the generic cospark of a Matrix Market pattern");
  compute->add_option("file", compute_file, "pattern file")->required();
  compute->add_flag("--json", compute_json, "machine-readable output");
  compute->add_flag("--diagnostics", compute_diag, "per-column trace");
  compute->add_option("--order-seed", compute_order_seed,
                      "randomize the greedy extension order");

  // gen
  int gen_rows = 0, gen_cols = 0;
  double gen_density = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random pattern file");
  gen->add_option("--rows", gen_rows, "row count")->required();
  gen->add_option("--cols", gen_cols, "column count")->required();
  gen->add_option("--density", gen_density, "Bernoulli density in [0,1]")
      ->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output file")->required();

  // verify
  VerifyParams verify_params;
  bool verify_json = false;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check the algorithm against both brute-force oracles");
  verify->add_option("--rows", verify_params.rows, "row count")->required();
  verify->add_option("--cols", verify_params.cols, "column count")->required();
  verify->add_option("--density", verify_params.density, "density")
      ->required();
  verify->add_option("--trials", verify_params.trials, "trial count")
      ->required();
  verify->add_option("--seed", verify_params.seed, "master seed")->required();
  verify->add_flag("--json", verify_json, "machine-readable output");

  // sweep
  SweepParams sweep_params;
  bool sweep_json = false;
  bool sweep_no_oracle = false;
  auto* sweep = app.add_subcommand(
      "sweep", "Density sweep comparing the algorithm with the numeric oracle");
  sweep->add_option("--rows", sweep_params.rows, "row count");
  sweep->add_option("--cols", sweep_params.cols, "column count");
  sweep->add_option("--levels", sweep_params.levels, "density levels");
  sweep->add_option("--per-level", sweep_params.per_level,
                    "patterns per level");
  sweep->add_option("--seed", sweep_params.seed, "master seed")->required();
  sweep->add_flag("--json", sweep_json, "machine-readable output");
  sweep->add_flag("--no-oracle", sweep_no_oracle,
                  "skip the brute-force comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) {
      return cmd_compute(compute_file, compute_json, compute_diag,
                         compute_order_seed);
    }
    if (*gen) {
      return cmd_gen(gen_rows, gen_cols, gen_density, gen_seed, gen_out);
    }
    if (*verify) {
      return cmd_verify(verify_params, verify_json);
    }
    sweep_params.oracle = !sweep_no_oracle;
    return cmd_sweep(sweep_params, sweep_json);
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
