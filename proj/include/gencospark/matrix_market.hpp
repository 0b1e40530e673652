#pragma once

#include <iosfwd>
#include <string>

#include "gencospark/pattern.hpp"

namespace gencospark {

// Matrix Market "coordinate pattern general" I/O. Files are 1-indexed;
// patterns in memory are 0-indexed. The writer emits entries sorted by
// (row, col), so write -> read -> write round-trips byte-identically.

SparsityPattern read_pattern(std::istream& in);
SparsityPattern read_pattern(const std::string& text);

void write_pattern(const SparsityPattern& pattern, std::ostream& out);
std::string write_pattern(const SparsityPattern& pattern);

}  // namespace gencospark
