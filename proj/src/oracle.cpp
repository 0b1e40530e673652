#include "gencospark/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "gencospark/errors.hpp"
#include "gencospark/matching.hpp"

namespace gencospark {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

void check_size_guard(int rows, const char* what) {
  if (rows > kOracleMaxRows) {
    throw SizeGuardError(std::string(what) + " refuses " +
                         std::to_string(rows) + " rows (limit " +
                         std::to_string(kOracleMaxRows) +
                         "): enumeration is exponential");
  }
}

// Row scaled to integers by the LCM of its denominators; row scaling does
// not change rank or kernels.
std::vector<BigInt> integer_row(const RationalMatrix& mat, int i) {
  BigInt scale = 1;
  for (int j = 0; j < mat.cols; ++j) {
    scale = lcm(scale, denominator(mat.at(i, j)));
  }
  std::vector<BigInt> row(mat.cols);
  for (int j = 0; j < mat.cols; ++j) {
    const Rational& q = mat.at(i, j);
    row[j] = numerator(q) * (scale / denominator(q));
  }
  return row;
}

// Incremental fraction-free row echelon over exact integers. push() reduces
// a row against the current pivots and keeps it as a new pivot if anything
// nonzero remains; pop() undoes the most recent push. Content is stripped
// after each elimination step to keep entries at minor scale.
class EchelonStack {
 public:
  explicit EchelonStack(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(lead_.size()); }

  bool push(const std::vector<BigInt>& row_in) {
    std::vector<BigInt> row = row_in;
    for (std::size_t k = 0; k < lead_.size(); ++k) {
      const BigInt f = row[lead_[k]];  // copy: the slot is overwritten below
      if (f == 0) continue;
      const std::vector<BigInt>& pivot = pivot_rows_[k];
      const BigInt lead_coeff = pivot[lead_[k]];
      for (int j = 0; j < cols_; ++j) {
        row[j] = row[j] * lead_coeff - pivot[j] * f;
      }
      strip_content(row);
    }
    int j = 0;
    while (j < cols_ && row[j] == 0) ++j;
    if (j == cols_) {
      grew_.push_back(false);
      return false;
    }
    if (row[j] < 0) {
      for (auto& x : row) x = -x;
    }
    lead_.push_back(j);
    pivot_rows_.push_back(std::move(row));
    grew_.push_back(true);
    return true;
  }

  void pop() {
    if (grew_.back()) {
      lead_.pop_back();
      pivot_rows_.pop_back();
    }
    grew_.pop_back();
  }

 private:
  static void strip_content(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& x : row) {
      if (x != 0) g = gcd(g, x);
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& x : row) x /= g;
    }
  }

  int cols_;
  std::vector<std::vector<BigInt>> pivot_rows_;
  std::vector<int> lead_;
  std::vector<bool> grew_;
};

// Nonzero kernel vector of the row-restricted submatrix via rational
// Gauss-Jordan. Requires the restricted rank to be below the column count.
std::vector<Rational> kernel_vector(const RationalMatrix& mat,
                                    const std::vector<int>& rows) {
  const int n = mat.cols;
  std::vector<std::vector<Rational>> pivots;
  std::vector<int> lead;
  for (int i : rows) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = mat.at(i, j);
    for (std::size_t k = 0; k < lead.size(); ++k) {
      const Rational f = row[lead[k]];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) row[j] -= pivots[k][j] * f;
    }
    int j = 0;
    while (j < n && row[j] == 0) ++j;
    if (j == n) continue;
    const Rational inv = row[j];
    for (int c = 0; c < n; ++c) row[c] /= inv;
    // back-reduce so every pivot row has zeros at the other pivot columns
    for (std::size_t k = 0; k < lead.size(); ++k) {
      const Rational f = pivots[k][j];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) pivots[k][c] -= row[c] * f;
    }
    lead.push_back(j);
    pivots.push_back(std::move(row));
  }
  if (static_cast<int>(lead.size()) >= n) {
    throw std::logic_error("kernel requested for a full-column-rank block");
  }

  std::vector<char> is_lead(n, 0);
  for (int c : lead) is_lead[c] = 1;
  int free_col = 0;
  while (is_lead[free_col]) ++free_col;

  std::vector<Rational> x(n, Rational(0));
  x[free_col] = 1;
  for (std::size_t k = 0; k < lead.size(); ++k) {
    x[lead[k]] = -pivots[k][free_col];
  }
  return x;
}

Rational row_dot(const RationalMatrix& mat, int i,
                 const std::vector<Rational>& x) {
  Rational acc = 0;
  for (int j = 0; j < mat.cols; ++j) acc += mat.at(i, j) * x[j];
  return acc;
}

std::vector<int> all_rows(int m) {
  std::vector<int> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = i;
  return rows;
}

// Largest row subset whose submatrix stays below full column rank.
// Depth-first over row indices in ascending order; a branch dies as soon as
// its prefix reaches full rank (supersets only grow the rank) or can no
// longer beat the incumbent.
class DeficientSetSearch {
 public:
  DeficientSetSearch(const std::vector<std::vector<BigInt>>& rows, int cols)
      : rows_(rows), m_(static_cast<int>(rows.size())), limit_(cols - 1),
        stack_(cols) {}

  std::vector<int> largest() {
    best_.clear();
    chosen_.clear();
    dfs(0);
    return best_;
  }

  // Lexicographically first subset of the given size with deficient rank;
  // matches a plain decreasing-size enumeration's first hit.
  std::vector<int> first_of_size(int size) {
    chosen_.clear();
    found_.clear();
    find_first(0, size);
    return found_;
  }

 private:
  void dfs(int from) {
    for (int j = from; j < m_; ++j) {
      if (static_cast<int>(chosen_.size()) + (m_ - j) <=
          static_cast<int>(best_.size())) {
        break;  // even taking every remaining row cannot beat the incumbent
      }
      if (stack_.push(rows_[j]) && stack_.rank() > limit_) {
        stack_.pop();
        continue;
      }
      chosen_.push_back(j);
      if (chosen_.size() > best_.size()) best_ = chosen_;
      dfs(j + 1);
      chosen_.pop_back();
      stack_.pop();
    }
  }

  bool find_first(int from, int need) {
    if (need == 0) {
      found_ = chosen_;
      return true;
    }
    for (int j = from; j <= m_ - need; ++j) {
      if (stack_.push(rows_[j]) && stack_.rank() > limit_) {
        stack_.pop();
        continue;
      }
      chosen_.push_back(j);
      if (find_first(j + 1, need - 1)) return true;
      chosen_.pop_back();
      stack_.pop();
    }
    return false;
  }

  const std::vector<std::vector<BigInt>>& rows_;
  int m_;
  int limit_;
  EchelonStack stack_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  std::vector<int> found_;
};

// Lexicographic k-combinations of {0..m-1}; calls fn for each until it
// returns true. Handles k == 0 (the single empty subset).
template <typename Fn>
bool for_each_combination(int m, int k, Fn&& fn) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (fn(c)) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

RationalMatrix realize(const SparsityPattern& pattern, std::uint64_t seed) {
  RationalMatrix mat(pattern.rows(), pattern.cols());
  std::mt19937_64 rng(seed);
  const BigInt denom = BigInt(1) << 20;
  for (const auto& [i, j] : pattern.entries()) {
    // low 20 bits + 1: exactly uniform over [1, 2^20]
    const std::uint64_t numer = (rng() & 0xfffffULL) + 1;
    mat.at(i, j) = Rational(BigInt(numer), denom);
  }
  return mat;
}

int exact_rank(const RationalMatrix& mat, const std::vector<int>& rows) {
  EchelonStack stack(mat.cols);
  for (int i : rows) {
    if (i < 0 || i >= mat.rows) {
      throw std::out_of_range("row " + std::to_string(i) + " out of range");
    }
    stack.push(integer_row(mat, i));
  }
  return stack.rank();
}

int exact_rank(const RationalMatrix& mat) {
  return exact_rank(mat, all_rows(mat.rows));
}

CosparkWitness brute_cospark(const RationalMatrix& mat) {
  const int m = mat.rows;
  const int n = mat.cols;
  check_size_guard(m, "brute_cospark");

  std::vector<std::vector<BigInt>> rows_z;
  rows_z.reserve(m);
  for (int i = 0; i < m; ++i) rows_z.push_back(integer_row(mat, i));

  CosparkWitness witness;
  {
    EchelonStack full(n);
    for (const auto& row : rows_z) full.push(row);
    if (full.rank() < n) {
      // Rank-deficient matrix: the whole image contains a zero vector.
      witness.value = 0;
      witness.kernel_vector = kernel_vector(mat, all_rows(m));
      return witness;
    }
  }

  DeficientSetSearch search(rows_z, n);
  const std::vector<int> largest = search.largest();
  const std::vector<int> subset = search.first_of_size(
      static_cast<int>(largest.size()));
  if (subset.size() != largest.size()) {
    throw std::logic_error("brute_cospark: witness re-scan disagrees");
  }

  witness.kernel_vector = kernel_vector(mat, subset);
  for (int i = 0; i < m; ++i) {
    if (row_dot(mat, i, witness.kernel_vector) != 0) {
      witness.support_rows.push_back(i);
    }
  }
  witness.value = static_cast<int>(witness.support_rows.size());
  // The subset is maximal, so exactly its complement must remain nonzero.
  if (witness.value != m - static_cast<int>(subset.size())) {
    throw std::logic_error("brute_cospark: support does not match witness");
  }
  return witness;
}

BruteCosparkPattern brute_generic_cospark(const SparsityPattern& pattern) {
  const int m = pattern.rows();
  const int n = pattern.cols();
  check_size_guard(m, "brute_generic_cospark");

  const BipartiteGraph graph(pattern);
  {
    RowSubgraphView full(graph, all_rows(m));
    if (max_matching(full).size < n) return {0, {}};
  }

  BruteCosparkPattern result;
  for (int size = m; size >= 0; --size) {
    bool hit = for_each_combination(m, size, [&](const std::vector<int>& c) {
      RowSubgraphView view(graph, c);
      if (max_matching(view).size != n - 1) return false;
      result.value = m - size;
      result.witness_rows = c;
      return true;
    });
    if (hit) return result;
  }
  throw std::logic_error(
      "brute_generic_cospark: no subset with matching n-1 found");
}

}  // namespace gencospark
