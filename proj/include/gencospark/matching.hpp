#pragma once

#include <vector>

#include "gencospark/pattern.hpp"

namespace gencospark {

inline constexpr int kUnmatched = -1;

/// Set of vertex-disjoint row-column pairs with O(1) partner lookup in both
/// directions. Mutated only by the matching engine below.
struct Matching {
  Matching(int rows, int cols)
      : row_match(rows, kUnmatched), col_match(cols, kUnmatched) {}

  std::vector<int> row_match;  // row -> matched column, or kUnmatched
  std::vector<int> col_match;  // column -> matched row, or kUnmatched
  int size = 0;
};

/// Membership bitmap over the rows of a shared graph. All matching queries
/// through the view ignore inactive rows. Activation is O(1); the underlying
/// graph is never copied.
class RowSubgraphView {
 public:
  explicit RowSubgraphView(const BipartiteGraph& graph)
      : graph_(&graph), active_(graph.rows(), 0) {}

  RowSubgraphView(const BipartiteGraph& graph, const std::vector<int>& rows);

  const BipartiteGraph& graph() const { return *graph_; }
  bool is_active(int row) const { return active_[row] != 0; }
  int active_count() const { return active_count_; }
  std::vector<int> active_rows() const;  // ascending

  void activate(int row);    // throws std::invalid_argument if already active
  void deactivate(int row);  // throws std::invalid_argument if not active

 private:
  const BipartiteGraph* graph_;
  std::vector<char> active_;
  int active_count_ = 0;
};

/// Hopcroft-Karp on the rows of the view. The result has maximum cardinality;
/// adjacency lists are scanned in ascending column order, so the matching is
/// deterministic.
Matching max_matching(const RowSubgraphView& view);

/// Structural rank of the induced submatrix: the size of a maximum matching.
int sprank(const RowSubgraphView& view);

/// True iff `row`, treated as active, has an augmenting path to an unmatched
/// column. Pure probe: neither the view nor the matching is modified.
bool would_augment(const RowSubgraphView& view, const Matching& matching,
                   int row);

/// Activates `new_row` and augments along a single BFS path if one exists.
/// Returns whether the matching grew (by exactly one). Throws
/// std::invalid_argument if the row is already active.
bool try_augment(RowSubgraphView& view, Matching& matching, int new_row);

/// Checks the Matching invariants against a graph and view: mutually inverse
/// partial bijections, size consistency, every pair an edge, every matched
/// row active.
bool is_valid_matching(const RowSubgraphView& view, const Matching& matching);

}  // namespace gencospark
