#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gencospark {

/// Sparsity pattern of an m x n matrix: the set of coordinates allowed to be
/// nonzero. Coordinates are 0-indexed, kept sorted by (row, col) and
/// duplicate-free. Immutable after construction; safe to share across
/// threads.
class SparsityPattern {
 public:
  using Entry = std::pair<int, int>;

  /// Validates bounds and rejects duplicates.
  SparsityPattern(int rows, int cols, std::vector<Entry> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  bool operator==(const SparsityPattern&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Entry> entries_;
};

/// Adjacency-list view of a pattern: row vertices on one side, column
/// vertices on the other, one edge per nonzero coordinate. Lists are sorted
/// ascending. Immutable.
class BipartiteGraph {
 public:
  explicit BipartiteGraph(const SparsityPattern& pattern);

  int rows() const { return static_cast<int>(row_adj_.size()); }
  int cols() const { return static_cast<int>(col_adj_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<int>& row_adj(int row) const { return row_adj_[row]; }
  const std::vector<int>& col_adj(int col) const { return col_adj_[col]; }

 private:
  int edge_count_;
  std::vector<std::vector<int>> row_adj_;
  std::vector<std::vector<int>> col_adj_;
};

SparsityPattern from_entries(int rows, int cols,
                             std::vector<SparsityPattern::Entry> coords);

/// Bernoulli(density) per cell, row-major order, driven by a fixed PRNG so
/// the same (rows, cols, density, seed) always yields the same pattern.
SparsityPattern random_pattern(int rows, int cols, double density,
                               std::uint64_t seed);

BipartiteGraph build_graph(const SparsityPattern& pattern);

}  // namespace gencospark
