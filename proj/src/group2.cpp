#include "dict2d/group2.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace dict2d {

int NameSuffixIndex::add_sequence(std::span<const std::uint32_t> names) {
  if (names.empty()) throw std::invalid_argument("empty sequence");
  Seq s;
  s.content.assign(names.begin(), names.end());
  s.sid = tree_.add_string(s.content);
  const int handle = next_handle_++;
  seqs_.emplace(handle, std::move(s));
  return handle;
}

void NameSuffixIndex::remove_sequence(int handle) {
  if (seqs_.erase(handle) == 0)
    throw std::invalid_argument("unknown sequence handle");
  ++dead_;
  if (2 * dead_ > seqs_.size()) rebuild();
}

void NameSuffixIndex::rebuild() {
  std::vector<int> handles;
  handles.reserve(seqs_.size());
  for (const auto& [h, s] : seqs_) handles.push_back(h);
  std::sort(handles.begin(), handles.end());
  GeneralizedSuffixTree fresh(counters_);
  for (const int h : handles) {
    Seq& s = seqs_.at(h);
    s.sid = fresh.add_string(s.content);
  }
  tree_ = std::move(fresh);
  dead_ = 0;
  ++rebuilds_;
}

std::int64_t NameSuffixIndex::lcp(int ha, int ia, int hb, int ib) const {
  const Seq& a = seqs_.at(ha);
  const Seq& b = seqs_.at(hb);
  const auto la = static_cast<std::int64_t>(a.content.size()) - ia + 1;
  const auto lb = static_cast<std::int64_t>(b.content.size()) - ib + 1;
  assert(la >= 0 && lb >= 0);
  const std::int64_t raw = tree_.lcp_suffixes(a.sid, ia - 1, b.sid, ib - 1);
  return std::min({raw, la, lb});
}

void Group2Engine::add_pattern(const PatternMatrix& p,
                               std::span<const std::uint32_t> row_names,
                               int filter_row) {
  if (patterns_.contains(p.id)) throw std::invalid_argument("duplicate id");
  if (patterns_.empty()) m_bar_ = p.width();
  assert(p.width() == m_bar_);
  assert(filter_row >= 1 && filter_row <= p.height());
  Pattern g;
  g.height = p.height();
  g.filter_row = filter_row;
  g.row_names.assign(row_names.begin(), row_names.end());
  g.wit_names.reserve(p.rows.size());
  for (const std::string& row : p.rows)
    g.wit_names.push_back(witnesses_.insert_string(row));
  std::vector<DynMatcher::Symbol> bytes(
      p.rows[static_cast<std::size_t>(filter_row - 1)].size());
  for (std::size_t k = 0; k < bytes.size(); ++k)
    bytes[k] = static_cast<unsigned char>(
        p.rows[static_cast<std::size_t>(filter_row - 1)][k]);
  g.matcher_id = filter_matcher_.insert_pattern(std::move(bytes));
  matcher_to_id_[g.matcher_id] = p.id;
  g.handle = nsi_.add_sequence(g.wit_names);
  patterns_.emplace(p.id, std::move(g));
}

void Group2Engine::remove_pattern(int id) {
  auto it = patterns_.find(id);
  if (it == patterns_.end()) throw std::invalid_argument("unknown pattern id");
  filter_matcher_.remove_pattern(it->second.matcher_id);
  matcher_to_id_.erase(it->second.matcher_id);
  nsi_.remove_sequence(it->second.handle);
  for (const std::uint32_t name : it->second.wit_names)
    witnesses_.remove_string(name);
  patterns_.erase(it);
  if (patterns_.empty()) m_bar_ = 0;
}

// One same-column duel between vertically overlapping candidates a (upper)
// and b (lower). The first row where their name sequences disagree yields a
// witness byte; whichever candidate disagrees with the text there dies (at
// least one must, since the two pattern bytes differ). A true occurrence can
// never be killed: its bytes equal the text everywhere.
void Group2Engine::vertical_duels(std::span<const std::string_view> rows,
                                  std::vector<Cand>& cands,
                                  Group2Diag* diag) const {
  std::vector<int> order(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cand& ca = cands[static_cast<std::size_t>(a)];
    const Cand& cb = cands[static_cast<std::size_t>(b)];
    return std::tie(ca.j, ca.x, ca.id) < std::tie(cb.j, cb.x, cb.id);
  });
  std::vector<int> stack;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const int idx = order[oi];
    Cand& c = cands[static_cast<std::size_t>(idx)];
    if (oi > 0 &&
        cands[static_cast<std::size_t>(order[oi - 1])].j != c.j)
      stack.clear();
    if (!stack.empty()) {
      Cand& t = cands[static_cast<std::size_t>(stack.back())];
      if (t.x + t.g->height > c.x) {
        if (counters_) ++counters_->vertical_duels;
        if (diag) ++diag->vertical_duels;
        const int off = c.x - t.x;
        const int overlap = std::min(t.g->height - off, c.g->height);
        const std::int64_t lcp =
            nsi_.lcp(t.g->handle, off + 1, c.g->handle, 1);
        if (lcp < overlap) {
          const int k = static_cast<int>(lcp);
          const std::uint32_t na =
              t.g->wit_names[static_cast<std::size_t>(off + k)];
          const std::uint32_t nb =
              c.g->wit_names[static_cast<std::size_t>(k)];
          assert(na != nb);
          const int w = static_cast<int>(witnesses_.witness_query(na, nb));
          assert(w >= 1 && w <= m_bar_);
          const unsigned char tb = static_cast<unsigned char>(
              rows[static_cast<std::size_t>(c.x + k - 1)]
                  [static_cast<std::size_t>(c.j + w - 2)]);
          const unsigned char ab =
              rows_.access_char(t.g->row_names[static_cast<std::size_t>(off + k)], w);
          const unsigned char bb =
              rows_.access_char(c.g->row_names[static_cast<std::size_t>(k)], w);
          if (counters_) counters_->comparisons += 2;
          assert(ab != bb);
          if (ab != tb) {
            t.alive = false;
            if (diag) diag->killed.push_back(Occurrence{t.id, t.x, t.j});
            stack.pop_back();
          }
          if (bb != tb) {
            c.alive = false;
            if (diag) diag->killed.push_back(Occurrence{c.id, c.x, c.j});
          }
        }
      }
    }
    if (c.alive) stack.push_back(idx);
  }
}

void Group2Engine::sweep(std::span<const std::string_view> rows,
                         std::vector<Cand>& cands,
                         std::vector<Occurrence>& out,
                         Group2Diag* diag) const {
  const int height = static_cast<int>(rows.size());
  std::vector<int> order(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cand& ca = cands[static_cast<std::size_t>(a)];
    const Cand& cb = cands[static_cast<std::size_t>(b)];
    return std::tie(ca.x, ca.j, ca.id) < std::tie(cb.x, cb.j, cb.id);
  });
  std::size_t next = 0;
  std::vector<int> active;  // alive candidates covering the current row, by j
  std::vector<int> row_stack;
  auto kill = [&](Cand& c) {
    c.alive = false;
    if (diag) diag->killed.push_back(Occurrence{c.id, c.x, c.j});
  };
  for (int y = 1; y <= height; ++y) {
    while (next < order.size() &&
           cands[static_cast<std::size_t>(order[next])].x == y) {
      const int idx = order[next++];
      const Cand& c = cands[static_cast<std::size_t>(idx)];
      if (!c.alive) continue;
      auto pos = std::lower_bound(
          active.begin(), active.end(), idx, [&](int a, int b) {
            const Cand& ca = cands[static_cast<std::size_t>(a)];
            const Cand& cb = cands[static_cast<std::size_t>(b)];
            return std::tie(ca.j, ca.x, ca.id) < std::tie(cb.j, cb.x, cb.id);
          });
      active.insert(pos, idx);
    }
    if (!active.empty()) {
      const std::string_view row = rows[static_cast<std::size_t>(y - 1)];
      // Horizontal duels: make overlapping survivors agree on this row.
      row_stack.clear();
      for (const int idx : active) {
        Cand& c = cands[static_cast<std::size_t>(idx)];
        if (!c.alive) continue;
        const std::uint32_t nc =
            c.g->row_names[static_cast<std::size_t>(y - c.x)];
        while (!row_stack.empty()) {
          Cand& p = cands[static_cast<std::size_t>(row_stack.back())];
          const int d = c.j - p.j;
          if (d >= m_bar_) break;
          const std::uint32_t np =
              p.g->row_names[static_cast<std::size_t>(y - p.x)];
          if (np == nc && d == 0) break;
          if (counters_) ++counters_->horizontal_duels;
          const std::int64_t lcp = rows_.lcp_rows(np, d + 1, nc, 1);
          const int overlap = m_bar_ - d;
          if (lcp >= overlap) break;
          const int col = c.j + static_cast<int>(lcp);
          const unsigned char tb = static_cast<unsigned char>(
              row[static_cast<std::size_t>(col - 1)]);
          const unsigned char pb =
              rows_.access_char(np, d + static_cast<int>(lcp) + 1);
          const unsigned char cb =
              rows_.access_char(nc, static_cast<int>(lcp) + 1);
          if (counters_) counters_->comparisons += 2;
          assert(pb != cb);
          if (pb != tb) {
            kill(p);
            row_stack.pop_back();
          }
          if (cb != tb) {
            kill(c);
            break;
          }
          if (p.alive) break;
        }
        if (c.alive) row_stack.push_back(idx);
      }
      // Byte pass: overlapping survivors agree, so each covered text byte
      // is read once; a mismatch kills every survivor covering its column.
      int verified_to = 0;
      for (std::size_t si = 0; si < row_stack.size(); ++si) {
        Cand& c = cands[static_cast<std::size_t>(row_stack[si])];
        if (!c.alive) continue;
        const std::uint32_t nc =
            c.g->row_names[static_cast<std::size_t>(y - c.x)];
        for (int col = std::max(c.j, verified_to + 1); col < c.j + m_bar_;
             ++col) {
          const unsigned char tb = static_cast<unsigned char>(
              row[static_cast<std::size_t>(col - 1)]);
          const unsigned char pb =
              rows_.access_char(nc, col - c.j + 1);
          if (counters_) ++counters_->comparisons;
          verified_to = col;
          if (tb != pb) {
            for (const int k2 : row_stack) {
              Cand& c2 = cands[static_cast<std::size_t>(k2)];
              if (c2.alive && c2.j <= col && col < c2.j + m_bar_) kill(c2);
            }
            break;
          }
        }
      }
    }
    // Retire candidates whose last row is y; survivors are occurrences.
    std::erase_if(active, [&](int idx) {
      Cand& c = cands[static_cast<std::size_t>(idx)];
      if (!c.alive) return true;
      if (c.x + c.g->height - 1 == y) {
        out.push_back(Occurrence{c.id, c.x, c.j});
        return true;
      }
      return false;
    });
  }
}

void Group2Engine::search_block(std::span<const std::string_view> rows, int w,
                                std::vector<Occurrence>& out,
                                Group2Diag* diag) const {
  if (patterns_.empty()) return;
  const int height = static_cast<int>(rows.size());
  if (height == 0 || w < m_bar_) return;
  std::vector<Cand> cands;
  std::vector<DynMatcher::Symbol> line(static_cast<std::size_t>(w));
  std::vector<std::pair<int, int>> hits;
  for (int y = 1; y <= height; ++y) {
    const std::string_view row = rows[static_cast<std::size_t>(y - 1)];
    assert(static_cast<int>(row.size()) == w);
    for (int c = 0; c < w; ++c)
      line[static_cast<std::size_t>(c)] =
          static_cast<unsigned char>(row[static_cast<std::size_t>(c)]);
    filter_matcher_.scan(line, hits);
    for (const auto& [e, mid] : hits) {
      const int pid = matcher_to_id_.at(mid);
      const Pattern& g = patterns_.at(pid);
      const int x = y - (g.filter_row - 1);
      const int j = e - m_bar_ + 1;
      if (x < 1 || x + g.height - 1 > height) continue;
      cands.push_back(Cand{&g, pid, x, j, true});
    }
  }
  if (diag) diag->candidates += cands.size();
  if (counters_)
    counters_->observe_transient(static_cast<std::uint64_t>(w) +
                                 4 * cands.size());
  if (cands.empty()) return;
  vertical_duels(rows, cands, diag);
  sweep(rows, cands, out, diag);
}

}  // namespace dict2d
