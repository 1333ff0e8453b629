#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dict2d/core.hpp"
#include "dict2d/counters.hpp"
#include "dict2d/dyn_dict_1d.hpp"
#include "dict2d/periodicity.hpp"
#include "dict2d/rmq.hpp"
#include "dict2d/witness_tree.hpp"

namespace dict2d {

// kCongruenceOnly disables the two fast verification paths so tests can
// compare them against the row-by-row congruence rule.
enum class Group1Verify { kAuto, kCongruenceOnly };

struct Group1Diag {
  std::uint64_t candidates = 0;
};

// Engine for patterns whose every row has period <= floor(width/4). Rows are
// replaced by conjugacy-class names (the class tree names the least-rotation
// tiling of each row), a 1D dictionary over name columns finds candidate top
// rows inside a block, and column alignment is decided by congruences on the
// positions of each row's least rotation. Tall vertically-periodic patterns
// are verified chunkwise through block-class tokens instead of row by row.
class Group1Engine {
 public:
  Group1Engine(Counters* counters, WitnessTree& classes,
               BlockClassNamer& namer)
      : counters_(counters),
        classes_(classes),
        namer_(namer),
        name_matcher_(counters) {}

  void add_pattern(const PatternMatrix& p);
  void remove_pattern(int id);
  bool empty() const { return patterns_.empty(); }
  bool has_pattern(int id) const { return patterns_.contains(id); }

  // Appends block-relative occurrences (unsorted) for a block given as one
  // string_view per row, all of width w.
  void search_block(std::span<const std::string_view> rows, int w,
                    std::vector<Occurrence>& out,
                    Group1Verify mode = Group1Verify::kAuto,
                    Group1Diag* diag = nullptr) const;

 private:
  struct Pattern {
    int height = 0;
    std::vector<RowMeta> metas;           // relative lwpos per row
    std::vector<std::uint32_t> classes;   // row class names, top to bottom
    LcmTable lcm;
    int pi = 0;                 // smallest vertical period of `classes`
    bool use_pblocks = false;   // tall and vertically periodic
    CanonicalSignature sig;     // when !use_pblocks
    std::vector<PBlockToken> tokens;  // when use_pblocks
    std::vector<int> kmp_fail;        // weak first position, size tokens+1
    int matcher_id = 0;
  };

  // min over rows of `right` and max over rows of `left` bound the columns
  // where every row's periodic extent covers a width-m window.
  struct WidthTables {
    RangeTable<int, std::greater<int>> max_left;
    RangeTable<int> min_right;
  };

  // Admissible column window [lo, hi] for a candidate with rows
  // [top, top+h-1] (1-based), empty when lo > hi.
  std::pair<int, int> column_window(const WidthTables& tables, int top,
                                    int h, int w) const;

  void emit_columns(const Pattern& g, std::span<const RowMeta> text, int top,
                    int i0, u128 a, u128 m, int lo, int hi,
                    std::vector<Occurrence>& out, int id) const;
  void verify_congruence(const Pattern& g, std::span<const RowMeta> text,
                         int top, int lo, int hi,
                         std::vector<Occurrence>& out, int id) const;
  void verify_signature(const Pattern& g, std::span<const RowMeta> text,
                        int top, int lo, int hi, std::vector<Occurrence>& out,
                        int id) const;
  void verify_pblocks(const Pattern& g, std::span<const RowMeta> text,
                      std::span<const int> tops, int w,
                      const WidthTables& tables, std::vector<Occurrence>& out,
                      int id) const;

  Counters* counters_ = nullptr;
  WitnessTree& classes_;
  BlockClassNamer& namer_;
  DynMatcher name_matcher_;
  std::unordered_map<int, Pattern> patterns_;
  std::unordered_map<int, int> matcher_to_id_;
  int m_bar_ = 0;
};

}  // namespace dict2d
