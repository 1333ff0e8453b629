#include "dict2d/dictionary.hpp"

#include <algorithm>
#include <stdexcept>

namespace dict2d {

int Dictionary2D::insert_pattern(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("pattern has no rows");
  const int w = static_cast<int>(rows.front().size());
  if (w == 0) throw std::invalid_argument("pattern has empty rows");
  for (const std::string& r : rows)
    if (static_cast<int>(r.size()) != w)
      throw std::invalid_argument("pattern rows have differing widths");
  if (m_bar_ != 0 && w != m_bar_)
    throw std::invalid_argument("pattern width differs from the dictionary's");
  PatternMatrix p;
  p.id = next_id_++;
  p.rows = rows;
  Rec rec;
  rec.height = p.height();
  rec.row_names.reserve(rows.size());
  for (const std::string& r : rows)
    rec.row_names.push_back(row_index_.insert_row(r));
  bird_.add_pattern(p, rec.row_names);
  const Classification cls = classify_pattern(p);
  rec.small_periods = cls.small_periods;
  if (cls.small_periods)
    group1_.add_pattern(p);
  else
    group2_.add_pattern(p, rec.row_names, cls.filter_row);
  m_bar_ = w;
  ell_ += static_cast<long long>(rec.height) * w;
  heights_.insert(rec.height);
  recs_.emplace(p.id, std::move(rec));
  return p.id;
}

void Dictionary2D::remove_pattern(int id) {
  auto it = recs_.find(id);
  if (it == recs_.end()) throw std::invalid_argument("unknown pattern id");
  const Rec& rec = it->second;
  bird_.remove_pattern(id);
  if (rec.small_periods)
    group1_.remove_pattern(id);
  else
    group2_.remove_pattern(id);
  for (const std::uint32_t name : rec.row_names) row_index_.remove_row(name);
  heights_.erase(heights_.find(rec.height));
  ell_ -= static_cast<long long>(rec.height) * m_bar_;
  recs_.erase(it);
  if (recs_.empty()) m_bar_ = 0;
}

std::vector<Occurrence> Dictionary2D::search(const TextGrid& text) const {
  if (recs_.empty()) return {};
  for (const std::string& r : text.rows)
    if (static_cast<int>(r.size()) != text.width())
      throw std::invalid_argument("ragged text grid");
  Engine e = engine_;
  if (e == Engine::kAuto)
    e = size() >= m_bar_ ? Engine::kBlocked : Engine::kGrouped;
  switch (e) {
    case Engine::kLinear:
      return bird_.search_linear(text);
    case Engine::kBlocked:
      return bird_.search_blocked(text, row_index_, plan(), true);
    default:
      return search_grouped(text);
  }
}

std::vector<Occurrence> Dictionary2D::search_grouped(
    const TextGrid& text) const {
  std::vector<Occurrence> out;
  const int n1 = text.height(), n2 = text.width();
  if (n1 == 0 || n2 < m_bar_) return out;
  const BlockPlan bp = plan();
  std::vector<std::string_view> views;
  std::vector<Occurrence> local;
  bp.for_each_block(n1, n2, [&](int br, int bc, int h, int w) {
    if (w < m_bar_) return;
    views.clear();
    views.reserve(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i)
      views.emplace_back(text.rows[static_cast<std::size_t>(br - 1 + i)].data() +
                             (bc - 1),
                         static_cast<std::size_t>(w));
    local.clear();
    group1_.search_block(views, w, local);
    group2_.search_block(views, w, local);
    for (const Occurrence& o : local) {
      const int r = br + o.row - 1;
      const int c = bc + o.col - 1;
      if (bp.attributed(br, bc, r, c)) out.push_back(Occurrence{o.pattern, r, c});
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

Dictionary2D::Stats Dictionary2D::stats() const {
  Stats s;
  s.d = size();
  s.ell = ell_;
  s.m_bar = m_bar_;
  s.m_prime = m_prime();
  s.tau = counters_.tau;
  s.comparisons = counters_.comparisons;
  return s;
}

}  // namespace dict2d
