#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace dict2d {

// Rectangular byte matrix. Rows all have the same length; the bytes '\n' and
// '\r' are excluded from the alphabet so that files round-trip exactly.
struct TextGrid {
  std::vector<std::string> rows;

  int height() const { return static_cast<int>(rows.size()); }
  int width() const {
    return rows.empty() ? 0 : static_cast<int>(rows.front().size());
  }
  bool operator==(const TextGrid&) const = default;
};

// A dictionary pattern: a byte matrix plus the id it was registered under.
struct PatternMatrix {
  int id = 0;
  std::vector<std::string> rows;

  int height() const { return static_cast<int>(rows.size()); }
  int width() const {
    return rows.empty() ? 0 : static_cast<int>(rows.front().size());
  }
  bool operator==(const PatternMatrix&) const = default;
};

// One match: pattern `pattern` has its top-left cell at (row, col), 1-based.
struct Occurrence {
  int pattern = 0;
  int row = 0;
  int col = 0;

  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.pattern == b.pattern && a.row == b.row && a.col == b.col;
  }
  // Report order: by row, then column, then pattern id.
  friend bool operator<(const Occurrence& a, const Occurrence& b) {
    return std::tie(a.row, a.col, a.pattern) < std::tie(b.row, b.col, b.pattern);
  }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix file format: first line "R C" (ASCII decimals, one space), then
// exactly R lines of exactly C bytes, each terminated by '\n'. Throws
// ParseError on malformed headers, row length mismatches, zero dimensions or
// trailing garbage.
TextGrid parse_matrix(std::string_view bytes);
std::string serialize_matrix(const TextGrid& grid);

// Reference matcher: direct comparison at every position. Output is sorted
// and duplicate-free; it is the oracle every engine is measured against.
std::vector<Occurrence> naive_search(std::span<const PatternMatrix> dict,
                                     const TextGrid& text);

// Smallest rotation of s together with its 1-based start position in s.
// Ties (non-primitive s) resolve to the smallest position. Quadratic; used
// as an oracle and for desk-size inputs only.
std::pair<std::string, int> naive_min_rotation(std::string_view s);

// "MATCH <id> <row> <col>\n" lines, sorted by (row, col, id).
std::string format_occurrences(std::span<const Occurrence> occs);

}  // namespace dict2d
