#include "gencospark/matching.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace gencospark {

RowSubgraphView::RowSubgraphView(const BipartiteGraph& graph,
                                 const std::vector<int>& rows)
    : RowSubgraphView(graph) {
  for (int row : rows) activate(row);
}

std::vector<int> RowSubgraphView::active_rows() const {
  std::vector<int> rows;
  rows.reserve(active_count_);
  for (int i = 0; i < static_cast<int>(active_.size()); ++i) {
    if (active_[i]) rows.push_back(i);
  }
  return rows;
}

void RowSubgraphView::activate(int row) {
  if (row < 0 || row >= graph_->rows()) {
    throw std::invalid_argument("row " + std::to_string(row) +
                                " out of range");
  }
  if (active_[row]) {
    throw std::invalid_argument("row " + std::to_string(row) +
                                " is already active");
  }
  active_[row] = 1;
  ++active_count_;
}

void RowSubgraphView::deactivate(int row) {
  if (row < 0 || row >= graph_->rows() || !active_[row]) {
    throw std::invalid_argument("row " + std::to_string(row) +
                                " is not active");
  }
  active_[row] = 0;
  --active_count_;
}

namespace {

constexpr int kInf = -1;  // unreached marker for the BFS layering

// Hopcroft-Karp phase state kept together so max_matching stays readable.
struct HopcroftKarp {
  const BipartiteGraph& g;
  const RowSubgraphView& view;
  Matching& m;
  std::vector<int> dist;   // per row
  std::vector<int> queue;

  bool bfs() {
    queue.clear();
    for (int u = 0; u < g.rows(); ++u) {
      if (view.is_active(u) && m.row_match[u] == kUnmatched) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reachable_free_col = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int c : g.row_adj(u)) {
        int w = m.col_match[c];
        if (w == kUnmatched) {
          reachable_free_col = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return reachable_free_col;
  }

  bool dfs(int u) {
    for (int c : g.row_adj(u)) {
      int w = m.col_match[c];
      if (w == kUnmatched || (dist[w] == dist[u] + 1 && dfs(w))) {
        m.row_match[u] = c;
        m.col_match[c] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }
};

// Single BFS from `start` over the current matching. Fills parent_col so a
// found path can be applied; returns the free column reached, or kUnmatched.
// Only matched rows are ever traversed beyond `start`, and matched rows are
// active by invariant, so the search respects the view without checks.
int find_augmenting_path(const BipartiteGraph& g, const Matching& m, int start,
                         std::vector<int>& parent_col) {
  parent_col.assign(g.cols(), kUnmatched);
  std::vector<int> queue{start};
  std::vector<char> col_seen(g.cols(), 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int c : g.row_adj(u)) {
      if (col_seen[c]) continue;
      col_seen[c] = 1;
      parent_col[c] = u;
      int w = m.col_match[c];
      if (w == kUnmatched) return c;
      queue.push_back(w);
    }
  }
  return kUnmatched;
}

void apply_augmenting_path(Matching& m, int free_col,
                           const std::vector<int>& parent_col) {
  int c = free_col;
  while (true) {
    int u = parent_col[c];
    int prev = m.row_match[u];
    m.row_match[u] = c;
    m.col_match[c] = u;
    if (prev == kUnmatched) break;  // reached the unmatched start row
    c = prev;
  }
  ++m.size;
}

}  // namespace

Matching max_matching(const RowSubgraphView& view) {
  const BipartiteGraph& g = view.graph();
  Matching m(g.rows(), g.cols());
  HopcroftKarp hk{g, view, m, std::vector<int>(g.rows(), kInf), {}};
  while (hk.bfs()) {
    for (int u = 0; u < g.rows(); ++u) {
      if (view.is_active(u) && m.row_match[u] == kUnmatched && hk.dfs(u)) {
        ++m.size;
      }
    }
  }
  return m;
}

int sprank(const RowSubgraphView& view) { return max_matching(view).size; }

bool would_augment(const RowSubgraphView& view, const Matching& matching,
                   int row) {
  if (row < 0 || row >= view.graph().rows()) {
    throw std::invalid_argument("row " + std::to_string(row) +
                                " out of range");
  }
  std::vector<int> parent_col;
  return find_augmenting_path(view.graph(), matching, row, parent_col) !=
         kUnmatched;
}

bool try_augment(RowSubgraphView& view, Matching& matching, int new_row) {
  if (new_row >= 0 && new_row < view.graph().rows() &&
      view.is_active(new_row)) {
    throw std::invalid_argument("row " + std::to_string(new_row) +
                                " is already in the view");
  }
  view.activate(new_row);
  const int before = matching.size;
  std::vector<int> parent_col;
  int free_col =
      find_augmenting_path(view.graph(), matching, new_row, parent_col);
  if (free_col != kUnmatched) {
    apply_augmenting_path(matching, free_col, parent_col);
  }
  // Adding one row moves the matching size by 0 or 1, never more.
  assert(matching.size - before == (free_col != kUnmatched ? 1 : 0));
  (void)before;
  return free_col != kUnmatched;
}

bool is_valid_matching(const RowSubgraphView& view, const Matching& matching) {
  const BipartiteGraph& g = view.graph();
  if (static_cast<int>(matching.row_match.size()) != g.rows() ||
      static_cast<int>(matching.col_match.size()) != g.cols()) {
    return false;
  }
  int pairs = 0;
  for (int u = 0; u < g.rows(); ++u) {
    int c = matching.row_match[u];
    if (c == kUnmatched) continue;
    if (c < 0 || c >= g.cols() || matching.col_match[c] != u) return false;
    if (!view.is_active(u)) return false;
    const auto& adj = g.row_adj(u);
    if (!std::binary_search(adj.begin(), adj.end(), c)) return false;
    ++pairs;
  }
  int matched_cols = 0;
  for (int c = 0; c < g.cols(); ++c) {
    int u = matching.col_match[c];
    if (u == kUnmatched) continue;
    if (u < 0 || u >= g.rows() || matching.row_match[u] != c) return false;
    ++matched_cols;
  }
  return pairs == matching.size && matched_cols == matching.size;
}

}  // namespace gencospark
