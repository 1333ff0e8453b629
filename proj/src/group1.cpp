#include "dict2d/group1.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

#include "dict2d/modmath.hpp"

namespace dict2d {

namespace {

// Smallest period of an integer sequence (length minus longest border).
int seq_period(std::span<const std::uint32_t> s) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return 0;
  std::vector<int> border(static_cast<std::size_t>(n) + 1, 0);
  border[0] = -1;
  int k = -1;
  for (int i = 0; i < n; ++i) {
    while (k >= 0 && s[static_cast<std::size_t>(k)] !=
                         s[static_cast<std::size_t>(i)])
      k = border[static_cast<std::size_t>(k)];
    border[static_cast<std::size_t>(i) + 1] = ++k;
  }
  return n - border[static_cast<std::size_t>(n)];
}

// Token equality with a free first position: at pos 0 only the block class
// must agree (the candidate's leading delta points outside its window).
bool tok_eq(const PBlockToken& a, const PBlockToken& b, int pos) {
  if (a.block_class == 0 || a.block_class != b.block_class) return false;
  if (pos == 0) return true;
  return a.has_delta && b.has_delta && a.delta_z == b.delta_z;
}

// Failure function of `toks` under tok_eq; fail[q] is the longest proper
// border of toks[0..q). Valid because tok_eq at positions >= 1 is a plain
// equality of (class, delta) pairs, and position 0 only widens matches.
std::vector<int> weak_failure(std::span<const PBlockToken> toks) {
  const int k = static_cast<int>(toks.size());
  std::vector<int> fail(static_cast<std::size_t>(k) + 1, 0);
  for (int q = 1; q < k; ++q) {
    int c = fail[static_cast<std::size_t>(q)];
    while (c > 0 && !tok_eq(toks[static_cast<std::size_t>(q)],
                            toks[static_cast<std::size_t>(c)], c))
      c = fail[static_cast<std::size_t>(c)];
    if (tok_eq(toks[static_cast<std::size_t>(q)],
               toks[static_cast<std::size_t>(c)], c))
      ++c;
    else
      c = 0;
    fail[static_cast<std::size_t>(q) + 1] = c;
  }
  return fail;
}

// ends[t] == 1 iff a full k-token match of `pat` ends at text token t.
std::vector<char> token_match_ends(std::span<const PBlockToken> text,
                                   std::span<const PBlockToken> pat,
                                   std::span<const int> fail,
                                   Counters* counters) {
  const int k = static_cast<int>(pat.size());
  std::vector<char> ends(text.size(), 0);
  int q = 0;
  for (std::size_t t = 0; t < text.size(); ++t) {
    if (counters) ++counters->comparisons;
    while (q > 0 && !tok_eq(text[t], pat[static_cast<std::size_t>(q)], q))
      q = fail[static_cast<std::size_t>(q)];
    if (tok_eq(text[t], pat[static_cast<std::size_t>(q)], q))
      ++q;
    else
      q = 0;
    if (q == k) {
      ends[t] = 1;
      q = fail[static_cast<std::size_t>(k)];
    }
  }
  return ends;
}

}  // namespace

void Group1Engine::add_pattern(const PatternMatrix& p) {
  if (patterns_.contains(p.id)) throw std::invalid_argument("duplicate id");
  if (patterns_.empty()) m_bar_ = p.width();
  assert(p.width() == m_bar_);
  Pattern g;
  g.height = p.height();
  g.metas.reserve(p.rows.size());
  g.classes.reserve(p.rows.size());
  std::vector<int> periods;
  periods.reserve(p.rows.size());
  for (const std::string& row : p.rows) {
    CanonizedRow cr = canonize_row(row);
    cr.meta.class_name = classes_.insert_string(cr.canonical);
    assert(cr.meta.period <= m_bar_ / 4);
    g.metas.push_back(cr.meta);
    g.classes.push_back(cr.meta.class_name);
    periods.push_back(cr.meta.period);
  }
  g.lcm = build_lcm_table(periods, 2 * static_cast<std::int64_t>(m_bar_));
  g.pi = seq_period(g.classes);
  g.use_pblocks = g.height > 2 * m_bar_ && g.pi <= g.height / 2;
  if (g.use_pblocks) {
    g.tokens = tokenize_pblocks(g.metas, g.pi, namer_, true);
    for (const PBlockToken& t : g.tokens)
      if (t.sig.overflow) g.use_pblocks = false;
    if (g.use_pblocks)
      g.kmp_fail = weak_failure(g.tokens);
    else
      g.tokens.clear();
  }
  if (!g.use_pblocks) g.sig = canonical_signature(g.metas);
  g.matcher_id = name_matcher_.insert_pattern(
      std::vector<DynMatcher::Symbol>(g.classes.begin(), g.classes.end()));
  matcher_to_id_[g.matcher_id] = p.id;
  patterns_.emplace(p.id, std::move(g));
}

void Group1Engine::remove_pattern(int id) {
  auto it = patterns_.find(id);
  if (it == patterns_.end()) throw std::invalid_argument("unknown pattern id");
  name_matcher_.remove_pattern(it->second.matcher_id);
  matcher_to_id_.erase(it->second.matcher_id);
  for (const std::uint32_t cls : it->second.classes)
    classes_.remove_string(cls);
  patterns_.erase(it);
  if (patterns_.empty()) m_bar_ = 0;
}

std::pair<int, int> Group1Engine::column_window(const WidthTables& tables,
                                                int top, int h, int w) const {
  const std::size_t lo_row = static_cast<std::size_t>(top - 1);
  const std::size_t hi_row = static_cast<std::size_t>(top + h - 2);
  const int max_left = tables.max_left.query(lo_row, hi_row);
  const int min_right = tables.min_right.query(lo_row, hi_row);
  return {std::max(max_left, 1),
          std::min(min_right - m_bar_ + 1, w - m_bar_ + 1)};
}

// Intersects j-1 = a (mod M) with the congruences of pattern rows
// [i0, height) at candidate top row `top`, then reports every admissible
// column in [lo, hi]. Once the modulus exceeds hi at most one column
// remains, so later rows are checked against it directly and the modulus
// never grows past hi * period.
void Group1Engine::emit_columns(const Pattern& g,
                                std::span<const RowMeta> text, int top,
                                int i0, u128 a, u128 m, int lo, int hi,
                                std::vector<Occurrence>& out, int id) const {
  if (lo > hi) return;
  bool capped = m > static_cast<u128>(hi);
  std::int64_t js = 0, ca = 0, cm = 0;
  if (capped) {
    if (a + 1 > static_cast<u128>(hi)) return;
    js = static_cast<std::int64_t>(a) + 1;
    if (js < lo) return;
  } else {
    ca = static_cast<std::int64_t>(a);
    cm = static_cast<std::int64_t>(m);
  }
  for (int i = i0; i < g.height; ++i) {
    const std::int64_t p = g.metas[static_cast<std::size_t>(i)].period;
    std::int64_t t = (static_cast<std::int64_t>(
                          text[static_cast<std::size_t>(top - 1 + i)].lwpos) -
                      g.metas[static_cast<std::size_t>(i)].lwpos) %
                     p;
    if (t < 0) t += p;
    if (counters_) ++counters_->comparisons;
    if (capped) {
      if ((js - 1 - t) % p != 0) return;
    } else {
      if (!modmath::crt_merge(ca, cm, t, p)) return;
      if (cm > hi) {
        js = ca + 1;
        capped = true;
        if (js < lo || js > hi) return;
      }
    }
  }
  if (capped) {
    out.push_back(Occurrence{id, top, static_cast<int>(js)});
    return;
  }
  const std::int64_t first = lo + (((ca + 1 - lo) % cm) + cm) % cm;
  for (std::int64_t j = first; j <= hi; j += cm)
    out.push_back(Occurrence{id, top, static_cast<int>(j)});
}

void Group1Engine::verify_congruence(const Pattern& g,
                                     std::span<const RowMeta> text, int top,
                                     int lo, int hi,
                                     std::vector<Occurrence>& out,
                                     int id) const {
  emit_columns(g, text, top, 0, 0, 1, lo, hi, out, id);
}

void Group1Engine::verify_signature(const Pattern& g,
                                    std::span<const RowMeta> text, int top,
                                    int lo, int hi,
                                    std::vector<Occurrence>& out,
                                    int id) const {
  if (lo > hi) return;
  CanonicalSignature sig_t =
      canonical_signature(text.subspan(static_cast<std::size_t>(top - 1),
                                       static_cast<std::size_t>(g.height)));
  if (counters_) counters_->comparisons += static_cast<std::uint64_t>(g.height);
  if (sig_t.overflow || g.sig.overflow) {
    verify_congruence(g, text, top, lo, hi, out, id);
    return;
  }
  if (!sig_t.same_class(g.sig)) return;
  assert(sig_t.modulus == g.sig.modulus);
  const u128 L = g.sig.modulus;
  const u128 delta = (sig_t.z % L + L - g.sig.z % L) % L;
  emit_columns(g, text, top, g.height, delta, L, lo, hi, out, id);
}

void Group1Engine::verify_pblocks(const Pattern& g,
                                  std::span<const RowMeta> text,
                                  std::span<const int> tops, int w,
                                  const WidthTables& tables,
                                  std::vector<Occurrence>& out,
                                  int id) const {
  const int k = static_cast<int>(g.tokens.size());
  const u128 L = g.tokens[0].sig.modulus;
  std::map<int, std::vector<int>> groups;  // residue of top mod pi -> tops
  for (const int top : tops) groups[(top - 1) % g.pi].push_back(top);
  for (auto& [res, gtops] : groups) {
    std::sort(gtops.begin(), gtops.end());
    const int r0 = gtops.front();
    const auto ttoks = tokenize_pblocks(
        text.subspan(static_cast<std::size_t>(r0 - 1)), g.pi, namer_, false);
    const auto ends =
        token_match_ends(ttoks, g.tokens, g.kmp_fail, counters_);
    for (const int top : gtops) {
      const int t0 = (top - r0) / g.pi;
      const int tend = t0 + k - 1;
      assert(tend < static_cast<int>(ttoks.size()));
      if (!ends[static_cast<std::size_t>(tend)]) continue;
      const auto [lo, hi] = column_window(tables, top, g.height, w);
      if (lo > hi) continue;
      // All k chunks force the same congruence, anchored at chunk t0; the
      // tail rows below the chunks are folded in row by row.
      const u128 delta =
          (ttoks[static_cast<std::size_t>(t0)].sig.z % L + L -
           g.tokens[0].sig.z % L) %
          L;
      emit_columns(g, text, top, k * g.pi, delta, L, lo, hi, out, id);
    }
  }
}

void Group1Engine::search_block(std::span<const std::string_view> rows, int w,
                                std::vector<Occurrence>& out,
                                Group1Verify mode, Group1Diag* diag) const {
  if (patterns_.empty()) return;
  const int height = static_cast<int>(rows.size());
  if (height == 0 || w < m_bar_) return;
  assert(w <= (3 * m_bar_ + 1) / 2);
  const int threshold = m_bar_ / 4;
  const int wstart = w - m_bar_;  // central window, 0-based
  const int wlen = 2 * m_bar_ - w;
  std::vector<RowMeta> metas(static_cast<std::size_t>(height));
  std::vector<DynMatcher::Symbol> tprime(static_cast<std::size_t>(height), 0);
  std::vector<int> lefts(static_cast<std::size_t>(height), 0);
  std::vector<int> rights(static_cast<std::size_t>(height), 0);
  std::string canon;
  for (int y = 0; y < height; ++y) {
    const std::string_view row = rows[static_cast<std::size_t>(y)];
    assert(static_cast<int>(row.size()) == w);
    const int q = compute_period(row.substr(static_cast<std::size_t>(wstart),
                                            static_cast<std::size_t>(wlen)));
    if (counters_) counters_->comparisons += static_cast<std::uint64_t>(wlen);
    if (q < 1 || q > threshold) continue;
    int left = wstart;
    while (left > 0 && row[static_cast<std::size_t>(left - 1)] ==
                           row[static_cast<std::size_t>(left - 1 + q)]) {
      --left;
      if (counters_) ++counters_->comparisons;
    }
    int right = wstart + wlen - 1;
    while (right + 1 < w && row[static_cast<std::size_t>(right + 1)] ==
                                row[static_cast<std::size_t>(right + 1 - q)]) {
      ++right;
      if (counters_) ++counters_->comparisons;
    }
    const std::string_view u =
        row.substr(static_cast<std::size_t>(left), static_cast<std::size_t>(q));
    const int r0 = least_rotation_index(u);
    canon.clear();
    for (int i = 0; i < m_bar_; ++i)
      canon.push_back(u[static_cast<std::size_t>((r0 + i) % q)]);
    const std::uint32_t cls = classes_.find_string(canon).value_or(0);
    RowMeta& m = metas[static_cast<std::size_t>(y)];
    m.period = q;
    m.lwpos = left + r0 + 1;
    if (cls != 0) {
      m.class_name = cls;
      m.left = left + 1;
      m.right = right + 1;
      tprime[static_cast<std::size_t>(y)] = cls;
      lefts[static_cast<std::size_t>(y)] = m.left;
      rights[static_cast<std::size_t>(y)] = m.right;
    }
  }
  WidthTables tables{RangeTable<int, std::greater<int>>(lefts),
                     RangeTable<int>(rights)};
  std::vector<std::pair<int, int>> hits;
  name_matcher_.scan(tprime, hits);
  if (counters_)
    counters_->observe_transient(static_cast<std::uint64_t>(height) * 8 +
                                 static_cast<std::uint64_t>(w) + hits.size());
  std::map<int, std::vector<int>> tops;
  for (const auto& [e, mid] : hits) {
    const int pid = matcher_to_id_.at(mid);
    tops[pid].push_back(e - patterns_.at(pid).height + 1);
    if (diag) ++diag->candidates;
  }
  for (const auto& [pid, list] : tops) {
    const Pattern& g = patterns_.at(pid);
    if (mode == Group1Verify::kAuto && g.use_pblocks) {
      verify_pblocks(g, metas, list, w, tables, out, pid);
      continue;
    }
    for (const int top : list) {
      const auto [lo, hi] = column_window(tables, top, g.height, w);
      if (mode == Group1Verify::kAuto && !g.sig.overflow && !g.use_pblocks)
        verify_signature(g, metas, top, lo, hi, out, pid);
      else
        verify_congruence(g, metas, top, lo, hi, out, pid);
    }
  }
}

}  // namespace dict2d
