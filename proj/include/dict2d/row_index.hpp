#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dict2d/counters.hpp"
#include "dict2d/suffix_tree.hpp"

namespace dict2d {

// Names the distinct rows of the live dictionary. Equal rows share one name;
// names are handed out monotonically and never reused. All queries run
// against one generalized suffix index over the live row set; removals only
// tombstone, and the index is rebuilt from the live rows once the dead
// outnumber half of them, which keeps removals amortized O(width).
class RowIndex {
 public:
  explicit RowIndex(Counters* counters = nullptr)
      : counters_(counters), tree_(counters) {}

  // Returns the name of `row`, registering it if unseen. Adopts the row
  // width on first insertion; widths may not mix.
  std::uint32_t insert_row(std::string_view row);

  // Drops one reference; the name dies when its last reference goes.
  void remove_row(std::uint32_t name);

  // i-th byte (1-based) of the named row.
  unsigned char access_char(std::uint32_t name, int i) const;

  // Longest common prefix of row a from offset i and row b from offset j
  // (both 1-based), answered by one lowest-common-ancestor walk.
  std::int64_t lcp_rows(std::uint32_t a, int i, std::uint32_t b, int j) const;

  // For every position k of `line` (0-based in `out`), the name of the live
  // row equal to line[k-width+1..k], or 0. One pass of matching statistics.
  void name_text_positions(std::string_view line,
                           std::vector<std::uint32_t>& out) const;

  bool is_live(std::uint32_t name) const { return recs_.contains(name); }
  int ref_count(std::uint32_t name) const;
  std::string row_string(std::uint32_t name) const;

  int width() const { return width_; }
  std::size_t live_names() const { return recs_.size(); }
  std::size_t dead_names() const { return dead_; }
  int rebuild_count() const { return rebuilds_; }

 private:
  struct Rec {
    int count = 0;
    int sid = -1;
  };

  void rebuild();

  Counters* counters_ = nullptr;
  GeneralizedSuffixTree tree_;
  std::unordered_map<std::string, std::uint32_t> name_of_content_;
  std::unordered_map<std::uint32_t, Rec> recs_;
  std::vector<std::uint32_t> sid_name_;  // 0 once the row is tombstoned
  std::size_t dead_ = 0;
  std::uint32_t next_name_ = 1;
  int width_ = 0;
  int rebuilds_ = 0;
};

}  // namespace dict2d
