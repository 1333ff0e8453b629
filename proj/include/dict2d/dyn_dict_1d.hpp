#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dict2d/counters.hpp"

namespace dict2d {

// Dynamic dictionary matching over sequences of uint32 symbols: a
// logarithmic collection of immutable Aho-Corasick automata. Insertion adds
// a singleton automaton and merges equal-sized neighbors like a binary
// counter, so each pattern is rebuilt O(log d) times. Removal tombstones the
// id; once dead ids outnumber live ones everything is compacted into one
// automaton. Scanning steps all tiers in lockstep, so hits come out in
// nondecreasing end position.
class DynMatcher {
 public:
  using Symbol = std::uint32_t;

  explicit DynMatcher(Counters* counters = nullptr) : counters_(counters) {}

  // Returns a fresh id (monotonic from 1, never reused).
  int insert_pattern(std::vector<Symbol> seq);
  void remove_pattern(int id);

  // Appends (end, id) for every live occurrence, end 1-based, in
  // nondecreasing end order. Equal patterns report each id separately.
  void scan(std::span<const Symbol> text,
            std::vector<std::pair<int, int>>& out) const;

  std::size_t live_count() const { return live_; }
  std::size_t tier_count() const { return tiers_.size(); }

 private:
  struct Automaton {
    struct State {
      std::map<Symbol, int> next;
      int fail = 0;
      int out_link = -1;  // nearest proper suffix state with output
      std::vector<int> ids;
    };
    std::vector<State> states;
    std::vector<std::pair<int, std::vector<Symbol>>> patterns;

    void build();
    int step(int state, Symbol c, Counters* counters) const;
  };

  void merge_tail_tiers();
  void purge();

  std::vector<Automaton> tiers_;
  std::unordered_set<int> dead_;
  std::unordered_set<int> known_;  // issued and not yet purged
  std::size_t live_ = 0;
  int next_id_ = 1;
  Counters* counters_ = nullptr;
};

}  // namespace dict2d
