#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dict2d/bird_baker.hpp"
#include "dict2d/core.hpp"
#include "dict2d/counters.hpp"
#include "dict2d/group1.hpp"
#include "dict2d/group2.hpp"
#include "dict2d/periodicity.hpp"
#include "dict2d/row_index.hpp"
#include "dict2d/witness_tree.hpp"

namespace dict2d {

enum class Engine { kAuto, kLinear, kBlocked, kGrouped };

// Dynamic two-dimensional dictionary matching. Patterns are byte matrices of
// one common width; ids are monotonically assigned and never reused; the
// width is fixed while the dictionary is non-empty. Every engine is kept
// current on insert/remove so searches can be answered by any of them:
//   linear   one pass over the whole text, working set O(text);
//   blocked  the same matcher run block by block, working set O(block);
//   grouped  block-local engines split by row periodicity: rows with period
//            at most width/4 go through conjugacy-class congruences, the
//            rest through filter-row candidates and duels.
// kAuto picks blocked when the dictionary has at least `width` patterns
// (the name automata are then worth their space), grouped otherwise.
class Dictionary2D {
 public:
  Dictionary2D()
      : row_index_(&counters_),
        classes_(&counters_),
        witnesses_(&counters_),
        bird_(&counters_),
        group1_(&counters_, classes_, namer_),
        group2_(&counters_, witnesses_, row_index_) {}

  // Returns the new pattern id. Throws std::invalid_argument on an empty
  // matrix, ragged rows, or a width differing from the dictionary's.
  int insert_pattern(const std::vector<std::string>& rows);
  void remove_pattern(int id);

  std::vector<Occurrence> search(const TextGrid& text) const;

  void set_engine(Engine e) { engine_ = e; }
  Engine engine() const { return engine_; }

  struct Stats {
    int d = 0;            // live patterns
    long long ell = 0;    // total live cells
    int m_bar = 0;        // common width (0 when empty)
    int m_prime = 0;      // tallest live pattern
    std::uint64_t tau = 0;
    std::uint64_t comparisons = 0;
  };
  Stats stats() const;

  Counters& counters() { return counters_; }
  const Counters& counters() const { return counters_; }
  int size() const { return static_cast<int>(recs_.size()); }
  int width() const { return m_bar_; }

  BlockPlan plan() const { return BlockPlan::make(m_prime(), m_bar_); }
  RowIndex& rows() { return row_index_; }
  Group1Engine& group1() { return group1_; }
  Group2Engine& group2() { return group2_; }
  BirdBakerEngine& bird() { return bird_; }

 private:
  struct Rec {
    int height = 0;
    std::vector<std::uint32_t> row_names;
    bool small_periods = false;
  };

  int m_prime() const { return heights_.empty() ? 0 : *heights_.rbegin(); }
  std::vector<Occurrence> search_grouped(const TextGrid& text) const;

  Counters counters_;
  RowIndex row_index_;
  WitnessTree classes_;    // least-rotation tilings (small-period rows)
  WitnessTree witnesses_;  // raw rows of filter-verified patterns
  BlockClassNamer namer_;
  BirdBakerEngine bird_;
  Group1Engine group1_;
  Group2Engine group2_;
  std::map<int, Rec> recs_;
  std::multiset<int> heights_;
  long long ell_ = 0;
  int m_bar_ = 0;
  int next_id_ = 1;
  Engine engine_ = Engine::kAuto;
};

}  // namespace dict2d
