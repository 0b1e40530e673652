#include "gencospark/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gencospark/errors.hpp"

namespace gencospark {

namespace {

const char* const kHeader = "%%MatrixMarket matrix coordinate pattern general";

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool iequals(const std::string& a, const std::string& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](unsigned char x, unsigned char y) {
                      return std::tolower(x) == std::tolower(y);
                    });
}

long long parse_int(const std::string& token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

SparsityPattern read_pattern(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) {
    throw ParseError(1, "empty input, expected Matrix Market header");
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    auto tokens = tokenize(line);
    bool ok = tokens.size() == 5 && iequals(tokens[0], "%%MatrixMarket") &&
              iequals(tokens[1], "matrix") && iequals(tokens[2], "coordinate") &&
              iequals(tokens[3], "pattern") && iequals(tokens[4], "general");
    if (!ok) {
      throw ParseError(1, "malformed header, expected '" +
                              std::string(kHeader) + "'");
    }
  }

  long long rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  std::vector<SparsityPattern::Entry> entries;
  std::set<SparsityPattern::Entry> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || line[0] == '%') continue;
    auto tokens = tokenize(line);
    if (!have_size) {
      if (tokens.size() != 3) {
        throw ParseError(lineno, "size line must be 'rows cols nnz'");
      }
      rows = parse_int(tokens[0], lineno);
      cols = parse_int(tokens[1], lineno);
      nnz = parse_int(tokens[2], lineno);
      if (rows < 1 || cols < 1) {
        throw ParseError(lineno, "dimensions must be positive, got " +
                                     std::to_string(rows) + " x " +
                                     std::to_string(cols));
      }
      if (nnz < 0) {
        throw ParseError(lineno, "entry count must be non-negative");
      }
      have_size = true;
      continue;
    }
    if (static_cast<long long>(entries.size()) == nnz) {
      throw ParseError(lineno, "more entries than the declared count of " +
                                   std::to_string(nnz));
    }
    if (tokens.size() != 2) {
      throw ParseError(lineno, "entry line must be 'row col'");
    }
    long long i = parse_int(tokens[0], lineno);
    long long j = parse_int(tokens[1], lineno);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError(lineno, "entry (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ") out of range for " +
                                   std::to_string(rows) + " x " +
                                   std::to_string(cols));
    }
    SparsityPattern::Entry entry{static_cast<int>(i - 1),
                                 static_cast<int>(j - 1)};
    if (!seen.insert(entry).second) {
      throw ParseError(lineno, "duplicate entry (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
    }
    entries.push_back(entry);
  }

  if (!have_size) {
    throw ParseError(lineno + 1, "missing size line");
  }
  if (static_cast<long long>(entries.size()) != nnz) {
    throw ParseError(lineno + 1,
                     "expected " + std::to_string(nnz) + " entries, found " +
                         std::to_string(entries.size()));
  }
  return SparsityPattern(static_cast<int>(rows), static_cast<int>(cols),
                         std::move(entries));
}

SparsityPattern read_pattern(const std::string& text) {
  std::istringstream stream(text);
  return read_pattern(stream);
}

void write_pattern(const SparsityPattern& pattern, std::ostream& out) {
  out << kHeader << '\n'
      << pattern.rows() << ' ' << pattern.cols() << ' ' << pattern.nnz()
      << '\n';
  for (const auto& [i, j] : pattern.entries()) {
    out << i + 1 << ' ' << j + 1 << '\n';
  }
}

std::string write_pattern(const SparsityPattern& pattern) {
  std::ostringstream out;
  write_pattern(pattern, out);
  return out.str();
}

}  // namespace gencospark
