#pragma once

#include <cstdint>

namespace dict2d {

// Instrumentation shared by all engine components. Counters are monotone
// except for explicit reset(); peak_transient_cells tracks the largest
// per-search scratch footprint observed (cells, not cumulative).
struct Counters {
  std::uint64_t tau = 0;               // self-index query cost units
  std::uint64_t comparisons = 0;       // byte comparisons (duels, verify, trees)
  std::uint64_t matcher_steps = 0;     // automaton transitions, scan + build
  std::uint64_t ms_inspections = 0;    // matching-statistics text fetches
  std::uint64_t vertical_duels = 0;    // candidate-vs-candidate column duels
  std::uint64_t horizontal_duels = 0;  // per-row label consistency duels
  std::uint64_t peak_transient_cells = 0;

  // Work measure used by the scaling checks: everything an engine does that
  // touches characters, automaton states or the self-index.
  std::uint64_t total_work() const {
    return tau + comparisons + matcher_steps + ms_inspections;
  }

  void observe_transient(std::uint64_t cells) {
    if (cells > peak_transient_cells) peak_transient_cells = cells;
  }

  void reset() { *this = Counters{}; }
};

}  // namespace dict2d
