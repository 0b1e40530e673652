#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gencospark/pattern.hpp"

namespace gencospark {

/// Per-excluded-column trace of the search: how many rows the column seed
/// contributed, how many the greedy extension added, and the candidate total.
struct ColumnDiagnostic {
  int excluded_col = 0;
  int seed_rows = 0;
  int added_rows = 0;
  int total_rows = 0;
};

struct CosparkResult {
  int value = 0;                  // generic cospark; 0 when deficient
  std::vector<int> witness_rows;  // largest row set with matching n-1, sorted
  bool deficient = false;         // structural rank below the column count
  std::vector<ColumnDiagnostic> per_column;  // filled when diagnostics are on
};

struct CosparkOptions {
  std::optional<std::uint64_t> order_seed;  // shuffles the extension order
  bool diagnostics = false;
};

/// Rows whose support avoids `excluded_col` entirely (all-zero rows
/// included). Throws std::out_of_range for a bad column index.
std::vector<int> rows_avoiding_column(const BipartiteGraph& graph,
                                      int excluded_col);

struct GreedyExtension {
  std::vector<int> rows;  // seed rows plus every accepted row, sorted
  int added = 0;          // accepted rows beyond the seed
};

/// Grows `seed_rows` by visiting `order` (a permutation of the complement)
/// and keeping each row unless accepting it would raise the structural rank
/// of the set to the full column count. The seed must have sprank at most
/// n-1.
GreedyExtension greedy_extend(const BipartiteGraph& graph,
                              const std::vector<int>& seed_rows,
                              const std::vector<int>& order);

/// Generic cospark of the pattern with a witness row set. Deficient patterns
/// (sprank < n) yield value 0 and an empty witness. Candidate sets are tried
/// for each excluded column in ascending order and ties keep the first, so
/// the default result is deterministic; an order seed randomizes only the
/// greedy visiting order.
CosparkResult generic_cospark(const BipartiteGraph& graph,
                              const CosparkOptions& options = {});
CosparkResult generic_cospark(const SparsityPattern& pattern,
                              const CosparkOptions& options = {});

}  // namespace gencospark
