#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dict2d/core.hpp"
#include "dict2d/counters.hpp"
#include "dict2d/dyn_dict_1d.hpp"
#include "dict2d/row_index.hpp"
#include "dict2d/suffix_tree.hpp"
#include "dict2d/witness_tree.hpp"

namespace dict2d {

// Suffix index over the row-name sequences of the dictionary's patterns;
// answers vertical LCPs (how many consecutive rows two patterns share from
// given start rows) in one lowest-common-ancestor walk. Removals tombstone;
// the index is rebuilt once dead sequences outnumber half the live ones.
class NameSuffixIndex {
 public:
  explicit NameSuffixIndex(Counters* counters = nullptr)
      : counters_(counters), tree_(counters) {}

  int add_sequence(std::span<const std::uint32_t> names);
  void remove_sequence(int handle);

  // LCP of sequence ha from 1-based row ia and hb from row ib.
  std::int64_t lcp(int ha, int ia, int hb, int ib) const;

  std::size_t live_count() const { return seqs_.size(); }
  int rebuild_count() const { return rebuilds_; }

 private:
  struct Seq {
    int sid = -1;
    std::vector<std::int64_t> content;
  };

  void rebuild();

  Counters* counters_ = nullptr;
  GeneralizedSuffixTree tree_;
  std::unordered_map<int, Seq> seqs_;
  std::size_t dead_ = 0;
  int next_handle_ = 1;
  int rebuilds_ = 0;
};

struct Group2Diag {
  std::uint64_t candidates = 0;
  std::uint64_t vertical_duels = 0;
  // Candidates eliminated by a duel or by the byte sweep, block-relative.
  std::vector<Occurrence> killed;
};

// Engine for patterns that contain a row with period above floor(width/4).
// That filter row occurs sparsely (at most three times per text row per
// pattern inside a block), so every occurrence is found by back-projecting
// filter-row matches into candidates, thinning same-column overlapping
// candidates with vertical duels (one witness byte decides), and verifying
// the survivors in one sweep whose horizontal duels make overlapping
// survivors agree, letting each text byte be read once.
class Group2Engine {
 public:
  Group2Engine(Counters* counters, WitnessTree& witnesses, RowIndex& rows)
      : counters_(counters),
        witnesses_(witnesses),
        rows_(rows),
        nsi_(counters),
        filter_matcher_(counters) {}

  void add_pattern(const PatternMatrix& p,
                   std::span<const std::uint32_t> row_names, int filter_row);
  void remove_pattern(int id);
  bool empty() const { return patterns_.empty(); }
  bool has_pattern(int id) const { return patterns_.contains(id); }

  // Appends block-relative occurrences (unsorted); rows all of width w.
  void search_block(std::span<const std::string_view> rows, int w,
                    std::vector<Occurrence>& out,
                    Group2Diag* diag = nullptr) const;

 private:
  struct Pattern {
    int height = 0;
    int filter_row = 0;                     // 1-based
    std::vector<std::uint32_t> wit_names;   // witness-tree name per row
    std::vector<std::uint32_t> row_names;   // row-index name per row
    int matcher_id = 0;
    int handle = 0;                         // name suffix index sequence
  };

  struct Cand {
    const Pattern* g;
    int id;
    int x;  // top row, 1-based block coordinates
    int j;  // left column
    bool alive;
  };

  void vertical_duels(std::span<const std::string_view> rows,
                      std::vector<Cand>& cands, Group2Diag* diag) const;
  void sweep(std::span<const std::string_view> rows, std::vector<Cand>& cands,
             std::vector<Occurrence>& out, Group2Diag* diag) const;

  Counters* counters_ = nullptr;
  WitnessTree& witnesses_;
  RowIndex& rows_;
  NameSuffixIndex nsi_;
  DynMatcher filter_matcher_;  // over text bytes; one filter row per pattern
  std::unordered_map<int, Pattern> patterns_;
  std::unordered_map<int, int> matcher_to_id_;
  int m_bar_ = 0;
};

}  // namespace dict2d
