#include "dict2d/core.hpp"

#include <algorithm>
#include <charconv>

namespace dict2d {

namespace {

// Parses a positive decimal int at s[pos...], advancing pos. Throws on
// anything that is not a plain digit run.
int parse_dim(std::string_view s, size_t& pos, const char* what) {
  size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw ParseError(std::string("matrix header: missing ") + what);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, value);
  if (ec != std::errc() || ptr != s.data() + pos)
    throw ParseError(std::string("matrix header: bad ") + what);
  if (value <= 0) throw ParseError(std::string("matrix header: ") + what + " must be positive");
  return value;
}

}  // namespace

TextGrid parse_matrix(std::string_view bytes) {
  size_t pos = 0;
  int r = parse_dim(bytes, pos, "row count");
  if (pos >= bytes.size() || bytes[pos] != ' ')
    throw ParseError("matrix header: expected single space between R and C");
  ++pos;
  int c = parse_dim(bytes, pos, "column count");
  if (pos >= bytes.size() || bytes[pos] != '\n')
    throw ParseError("matrix header: expected newline after C");
  ++pos;

  TextGrid grid;
  grid.rows.reserve(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    if (bytes.size() - pos < static_cast<size_t>(c) + 1)
      throw ParseError("matrix body: truncated at row " + std::to_string(i + 1));
    std::string_view row = bytes.substr(pos, static_cast<size_t>(c));
    if (row.find('\n') != std::string_view::npos ||
        row.find('\r') != std::string_view::npos)
      throw ParseError("matrix body: row " + std::to_string(i + 1) +
                       " shorter than declared width");
    pos += static_cast<size_t>(c);
    if (bytes[pos] != '\n')
      throw ParseError("matrix body: row " + std::to_string(i + 1) +
                       " longer than declared width");
    ++pos;
    grid.rows.emplace_back(row);
  }
  if (pos != bytes.size())
    throw ParseError("matrix body: trailing bytes after last row");
  return grid;
}

std::string serialize_matrix(const TextGrid& grid) {
  std::string out = std::to_string(grid.height()) + " " +
                    std::to_string(grid.width()) + "\n";
  for (const std::string& row : grid.rows) {
    out += row;
    out += '\n';
  }
  return out;
}

std::vector<Occurrence> naive_search(std::span<const PatternMatrix> dict,
                                     const TextGrid& text) {
  std::vector<Occurrence> out;
  const int n1 = text.height();
  const int n2 = text.width();
  for (const PatternMatrix& p : dict) {
    const int h = p.height();
    const int w = p.width();
    if (h == 0 || w == 0 || h > n1 || w > n2) continue;
    for (int r = 0; r + h <= n1; ++r) {
      for (int c = 0; c + w <= n2; ++c) {
        bool ok = true;
        for (int i = 0; i < h && ok; ++i)
          ok = text.rows[static_cast<size_t>(r + i)].compare(
                   static_cast<size_t>(c), static_cast<size_t>(w),
                   p.rows[static_cast<size_t>(i)]) == 0;
        if (ok) out.push_back({p.id, r + 1, c + 1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::string, int> naive_min_rotation(std::string_view s) {
  if (s.empty()) return {std::string(), 1};
  std::string best(s);
  int best_pos = 1;
  std::string doubled(s);
  doubled += s;
  for (size_t i = 1; i < s.size(); ++i) {
    std::string_view rot = std::string_view(doubled).substr(i, s.size());
    if (rot < best) {
      best.assign(rot);
      best_pos = static_cast<int>(i) + 1;
    }
  }
  return {best, best_pos};
}

std::string format_occurrences(std::span<const Occurrence> occs) {
  std::vector<Occurrence> sorted(occs.begin(), occs.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const Occurrence& o : sorted) {
    out += "MATCH " + std::to_string(o.pattern) + " " + std::to_string(o.row) +
           " " + std::to_string(o.col) + "\n";
  }
  return out;
}

}  // namespace dict2d
