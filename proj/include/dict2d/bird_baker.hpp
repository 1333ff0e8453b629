#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "dict2d/core.hpp"
#include "dict2d/counters.hpp"
#include "dict2d/dyn_dict_1d.hpp"
#include "dict2d/row_index.hpp"

namespace dict2d {

// Overlapping block decomposition: blocks of ceil(3h/2) x ceil(3w/2) placed
// every ceil(h/2) rows / ceil(w/2) columns, so every occurrence of an
// h x w pattern lies inside at least one block, and exactly one block claims
// it under the attribution rule below.
struct BlockPlan {
  int block_h = 0;
  int block_w = 0;
  int step_h = 1;
  int step_w = 1;

  static BlockPlan make(int max_height, int width) {
    BlockPlan p;
    p.block_h = (3 * max_height + 1) / 2;
    p.block_w = (3 * width + 1) / 2;
    p.step_h = (max_height + 1) / 2;
    p.step_w = (width + 1) / 2;
    return p;
  }

  // The block anchored at (br, bc) owns an occurrence at (r, c) iff the
  // occurrence starts within the first step of the block in both axes.
  bool attributed(int br, int bc, int r, int c) const {
    return r - br < step_h && c - bc < step_w;
  }

  template <class F>
  void for_each_block(int n1, int n2, F&& f) const {
    for (int br = 1; br <= n1; br += step_h)
      for (int bc = 1; bc <= n2; bc += step_w)
        f(br, bc, std::min(block_h, n1 - br + 1),
          std::min(block_w, n2 - bc + 1));
  }
};

// Two-level matcher: a 1D dictionary over the distinct pattern rows names
// each text position, then a 1D dictionary over those names, run down text
// columns, finds whole patterns. Linear mode names the whole text at once;
// blocked mode names block by block through the shared row index, keeping
// the working set proportional to one block.
class BirdBakerEngine {
 public:
  explicit BirdBakerEngine(Counters* counters = nullptr)
      : counters_(counters), row_matcher_(counters), col_matcher_(counters) {}

  void add_pattern(const PatternMatrix& p,
                   std::span<const std::uint32_t> row_names);
  void remove_pattern(int id);
  bool empty() const { return patterns_.empty(); }

  std::vector<Occurrence> search_linear(const TextGrid& text) const;
  std::vector<Occurrence> search_blocked(const TextGrid& text,
                                         const RowIndex& rows,
                                         const BlockPlan& plan,
                                         bool dedup = true) const;

 private:
  struct PatternRec {
    std::vector<std::uint32_t> names;  // one per pattern row, top to bottom
    int col_id = 0;
  };
  struct RowEntry {
    int matcher_id = 0;
    int count = 0;
  };

  void scan_columns(const std::vector<std::uint32_t>& named, int height,
                    int width, int base_r, int base_c, const BlockPlan* plan,
                    std::vector<Occurrence>& out) const;

  Counters* counters_ = nullptr;
  DynMatcher row_matcher_;  // over text bytes, ids name pattern rows
  DynMatcher col_matcher_;  // over row names, ids name whole patterns
  std::unordered_map<int, std::uint32_t> row_id_name_;
  std::unordered_map<std::uint32_t, RowEntry> row_entries_;
  std::unordered_map<int, int> col_id_pattern_;
  std::unordered_map<int, PatternRec> patterns_;
  int m_bar_ = 0;
};

}  // namespace dict2d
