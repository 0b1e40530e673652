#include "gencospark/cospark.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "gencospark/matching.hpp"
#include "gencospark/rng.hpp"

namespace gencospark {

std::vector<int> rows_avoiding_column(const BipartiteGraph& graph,
                                      int excluded_col) {
  if (excluded_col < 0 || excluded_col >= graph.cols()) {
    throw std::out_of_range("column " + std::to_string(excluded_col) +
                            " out of range for " +
                            std::to_string(graph.cols()) + " columns");
  }
  std::vector<char> touches(graph.rows(), 0);
  for (int row : graph.col_adj(excluded_col)) touches[row] = 1;
  std::vector<int> rows;
  for (int i = 0; i < graph.rows(); ++i) {
    if (!touches[i]) rows.push_back(i);
  }
  return rows;
}

GreedyExtension greedy_extend(const BipartiteGraph& graph,
                              const std::vector<int>& seed_rows,
                              const std::vector<int>& order) {
  const int limit = graph.cols() - 1;
  RowSubgraphView view(graph, seed_rows);
  if (static_cast<int>(seed_rows.size()) + static_cast<int>(order.size()) !=
      graph.rows()) {
    throw std::invalid_argument(
        "order must be a permutation of the seed complement");
  }
  Matching matching = max_matching(view);
  if (matching.size > limit) {
    throw std::invalid_argument(
        "seed rows already have full structural rank");
  }

  GreedyExtension result;
  for (int t : order) {
    if (matching.size == limit) {
      // One more matched pair would reach full column rank; keep the row
      // only if no augmenting path exists from it.
      if (would_augment(view, matching, t)) continue;
      view.activate(t);
    } else {
      try_augment(view, matching, t);
    }
    ++result.added;
  }
  assert(matching.size <= limit);
  result.rows = view.active_rows();
  return result;
}

CosparkResult generic_cospark(const BipartiteGraph& graph,
                              const CosparkOptions& options) {
  const int m = graph.rows();
  const int n = graph.cols();

  CosparkResult result;
  {
    RowSubgraphView full(graph);
    for (int i = 0; i < m; ++i) full.activate(i);
    if (max_matching(full).size < n) {
      result.deficient = true;
      return result;
    }
  }

  std::vector<int> best;
  for (int v = 0; v < n; ++v) {
    std::vector<int> seed = rows_avoiding_column(graph, v);
    std::vector<char> in_seed(m, 0);
    for (int row : seed) in_seed[row] = 1;
    std::vector<int> order;
    order.reserve(m - seed.size());
    for (int i = 0; i < m; ++i) {
      if (!in_seed[i]) order.push_back(i);
    }
    if (options.order_seed) {
      seeded_shuffle(order, derive_seed(*options.order_seed,
                                        {static_cast<std::uint64_t>(v)}));
    }
    GreedyExtension ext = greedy_extend(graph, seed, order);
    if (options.diagnostics) {
      result.per_column.push_back({v, static_cast<int>(seed.size()),
                                   ext.added,
                                   static_cast<int>(ext.rows.size())});
    }
    if (ext.rows.size() > best.size()) best = std::move(ext.rows);
  }

  result.value = m - static_cast<int>(best.size());
  result.witness_rows = std::move(best);
#ifndef NDEBUG
  {
    RowSubgraphView check(graph, result.witness_rows);
    assert(max_matching(check).size == n - 1);
  }
#endif
  return result;
}

CosparkResult generic_cospark(const SparsityPattern& pattern,
                              const CosparkOptions& options) {
  return generic_cospark(BipartiteGraph(pattern), options);
}

}  // namespace gencospark
