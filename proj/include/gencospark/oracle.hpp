#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gencospark/pattern.hpp"

namespace gencospark {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exhaustive enumeration is refused above this many rows.
inline constexpr int kOracleMaxRows = 22;

/// Dense exact-arithmetic realization of a pattern. Only the brute-force
/// oracles use it; there is no floating point and no tolerance anywhere.
struct RationalMatrix {
  RationalMatrix(int rows, int cols)
      : rows(rows), cols(cols), cells(static_cast<std::size_t>(rows) * cols) {}

  Rational& at(int i, int j) {
    return cells[static_cast<std::size_t>(i) * cols + j];
  }
  const Rational& at(int i, int j) const {
    return cells[static_cast<std::size_t>(i) * cols + j];
  }

  int rows;
  int cols;
  std::vector<Rational> cells;  // row-major
};

/// Fills every pattern entry with a nonzero rational k/2^20, k drawn
/// uniformly from [1, 2^20]; deterministic in (pattern, seed).
RationalMatrix realize(const SparsityPattern& pattern, std::uint64_t seed);

/// Rank of the row-restricted submatrix by fraction-free elimination over
/// exact integers.
int exact_rank(const RationalMatrix& mat, const std::vector<int>& rows);
int exact_rank(const RationalMatrix& mat);

/// Witness for the sparsest vector in the column space: a nonzero vector x
/// with A x zero outside `support_rows` and |support_rows| == value.
struct CosparkWitness {
  int value = 0;
  std::vector<int> support_rows;       // ascending
  std::vector<Rational> kernel_vector;  // x, length n, nonzero
};

/// Brute-force cospark of a concrete matrix: the largest row set whose
/// submatrix is column-rank-deficient, found by exhaustive subset search,
/// plus a kernel witness. Throws SizeGuardError above kOracleMaxRows rows.
CosparkWitness brute_cospark(const RationalMatrix& mat);

struct BruteCosparkPattern {
  int value = 0;
  std::vector<int> witness_rows;  // ascending
};

/// Brute-force generic cospark straight from the combinatorial definition:
/// subsets are enumerated in decreasing size and the first whose induced
/// max matching equals n-1 wins. Throws SizeGuardError above kOracleMaxRows
/// rows.
BruteCosparkPattern brute_generic_cospark(const SparsityPattern& pattern);

}  // namespace gencospark
