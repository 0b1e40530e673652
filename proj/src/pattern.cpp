#include "gencospark/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace gencospark {

namespace {

std::string coord_text(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

SparsityPattern::SparsityPattern(int rows, int cols,
                                 std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) {
    throw std::invalid_argument("pattern dimensions must be at least 1x1, got " +
                                std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
  for (const auto& [i, j] : entries_) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
      throw std::invalid_argument("coordinate " + coord_text(i, j) +
                                  " out of bounds for " +
                                  std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + " pattern");
    }
  }
  std::sort(entries_.begin(), entries_.end());
  auto dup = std::adjacent_find(entries_.begin(), entries_.end());
  if (dup != entries_.end()) {
    throw std::invalid_argument("duplicate coordinate " +
                                coord_text(dup->first, dup->second));
  }
}

SparsityPattern from_entries(int rows, int cols,
                             std::vector<SparsityPattern::Entry> coords) {
  return SparsityPattern(rows, cols, std::move(coords));
}

SparsityPattern random_pattern(int rows, int cols, double density,
                               std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must be in [0, 1], got " +
                                std::to_string(density));
  }
  // Compare a 53-bit draw against density * 2^53; exact for the endpoints
  // and identical on every platform with IEEE doubles.
  const auto threshold =
      static_cast<std::uint64_t>(std::ldexp(density, 53));
  std::mt19937_64 rng(seed);
  std::vector<SparsityPattern::Entry> entries;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if ((rng() >> 11) < threshold) {
        entries.emplace_back(i, j);
      }
    }
  }
  return SparsityPattern(rows, cols, std::move(entries));
}

BipartiteGraph::BipartiteGraph(const SparsityPattern& pattern)
    : edge_count_(pattern.nnz()),
      row_adj_(pattern.rows()),
      col_adj_(pattern.cols()) {
  // Pattern entries are sorted by (row, col), so both adjacency lists come
  // out ascending.
  for (const auto& [i, j] : pattern.entries()) {
    row_adj_[i].push_back(j);
    col_adj_[j].push_back(i);
  }
}

BipartiteGraph build_graph(const SparsityPattern& pattern) {
  return BipartiteGraph(pattern);
}

}  // namespace gencospark
