#include "dict2d/dyn_dict_1d.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace dict2d {

void DynMatcher::Automaton::build() {
  states.assign(1, State{});
  for (const auto& [id, seq] : patterns) {
    int v = 0;
    for (const Symbol c : seq) {
      auto it = states[static_cast<std::size_t>(v)].next.find(c);
      if (it == states[static_cast<std::size_t>(v)].next.end()) {
        states.emplace_back();
        it = states[static_cast<std::size_t>(v)]
                 .next.emplace(c, static_cast<int>(states.size()) - 1)
                 .first;
      }
      v = it->second;
    }
    states[static_cast<std::size_t>(v)].ids.push_back(id);
  }
  std::deque<int> queue;
  for (const auto& [c, v] : states[0].next) {
    states[static_cast<std::size_t>(v)].fail = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const State& su = states[static_cast<std::size_t>(u)];
    const int fu = su.fail;
    for (const auto& [c, v] : su.next) {
      int f = fu;
      while (true) {
        const State& sf = states[static_cast<std::size_t>(f)];
        auto it = sf.next.find(c);
        if (it != sf.next.end() && it->second != v) {
          f = it->second;
          break;
        }
        if (f == 0) break;
        f = sf.fail;
      }
      State& sv = states[static_cast<std::size_t>(v)];
      sv.fail = f;
      const State& sf = states[static_cast<std::size_t>(f)];
      sv.out_link = sf.ids.empty() ? sf.out_link : f;
      queue.push_back(v);
    }
  }
}

int DynMatcher::Automaton::step(int state, Symbol c,
                                Counters* counters) const {
  while (true) {
    if (counters) ++counters->matcher_steps;
    const State& s = states[static_cast<std::size_t>(state)];
    auto it = s.next.find(c);
    if (it != s.next.end()) return it->second;
    if (state == 0) return 0;
    state = s.fail;
  }
}

int DynMatcher::insert_pattern(std::vector<Symbol> seq) {
  if (seq.empty()) throw std::invalid_argument("empty pattern sequence");
  const int id = next_id_++;
  known_.insert(id);
  Automaton fresh;
  fresh.patterns.emplace_back(id, std::move(seq));
  fresh.build();
  tiers_.push_back(std::move(fresh));
  ++live_;
  merge_tail_tiers();
  return id;
}

void DynMatcher::merge_tail_tiers() {
  while (tiers_.size() >= 2 &&
         tiers_[tiers_.size() - 1].patterns.size() >=
             tiers_[tiers_.size() - 2].patterns.size()) {
    Automaton merged;
    merged.patterns = std::move(tiers_[tiers_.size() - 2].patterns);
    for (auto& p : tiers_.back().patterns)
      merged.patterns.push_back(std::move(p));
    tiers_.pop_back();
    tiers_.pop_back();
    merged.build();
    tiers_.push_back(std::move(merged));
  }
}

void DynMatcher::remove_pattern(int id) {
  if (!known_.contains(id) || dead_.contains(id))
    throw std::invalid_argument("unknown or dead pattern id");
  dead_.insert(id);
  --live_;
  if (dead_.size() > live_) purge();
}

void DynMatcher::purge() {
  std::vector<std::pair<int, std::vector<Symbol>>> live_patterns;
  for (auto& tier : tiers_)
    for (auto& [id, seq] : tier.patterns)
      if (!dead_.contains(id)) live_patterns.emplace_back(id, std::move(seq));
  for (const int id : dead_) known_.erase(id);
  dead_.clear();
  std::sort(live_patterns.begin(), live_patterns.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  tiers_.clear();
  if (live_patterns.empty()) return;
  Automaton merged;
  merged.patterns = std::move(live_patterns);
  merged.build();
  tiers_.push_back(std::move(merged));
}

void DynMatcher::scan(std::span<const Symbol> text,
                      std::vector<std::pair<int, int>>& out) const {
  out.clear();
  if (live_ == 0 || text.empty()) return;
  std::vector<int> state(tiers_.size(), 0);
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    for (std::size_t t = 0; t < tiers_.size(); ++t) {
      state[t] = tiers_[t].step(state[t], text[pos], counters_);
      int v = state[t];
      const auto& states = tiers_[t].states;
      if (!states[static_cast<std::size_t>(v)].ids.empty() ||
          states[static_cast<std::size_t>(v)].out_link >= 0) {
        while (v >= 0) {
          for (const int id : states[static_cast<std::size_t>(v)].ids)
            if (!dead_.contains(id))
              out.emplace_back(static_cast<int>(pos) + 1, id);
          v = states[static_cast<std::size_t>(v)].out_link;
        }
      }
    }
  }
}

}  // namespace dict2d
