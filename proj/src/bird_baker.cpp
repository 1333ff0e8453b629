#include "dict2d/bird_baker.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string_view>

namespace dict2d {

void BirdBakerEngine::add_pattern(const PatternMatrix& p,
                                  std::span<const std::uint32_t> row_names) {
  assert(row_names.size() == p.rows.size());
  if (patterns_.empty()) m_bar_ = p.width();
  assert(p.width() == m_bar_);
  PatternRec rec;
  rec.names.assign(row_names.begin(), row_names.end());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    RowEntry& entry = row_entries_[row_names[i]];
    if (entry.count++ == 0) {
      std::vector<DynMatcher::Symbol> bytes(p.rows[i].size());
      for (std::size_t k = 0; k < p.rows[i].size(); ++k)
        bytes[k] = static_cast<unsigned char>(p.rows[i][k]);
      entry.matcher_id = row_matcher_.insert_pattern(std::move(bytes));
      row_id_name_[entry.matcher_id] = row_names[i];
    }
  }
  rec.col_id = col_matcher_.insert_pattern(
      std::vector<DynMatcher::Symbol>(rec.names.begin(), rec.names.end()));
  col_id_pattern_[rec.col_id] = p.id;
  patterns_.emplace(p.id, std::move(rec));
}

void BirdBakerEngine::remove_pattern(int id) {
  auto it = patterns_.find(id);
  if (it == patterns_.end()) throw std::invalid_argument("unknown pattern id");
  col_matcher_.remove_pattern(it->second.col_id);
  col_id_pattern_.erase(it->second.col_id);
  for (const std::uint32_t name : it->second.names) {
    auto re = row_entries_.find(name);
    if (--re->second.count == 0) {
      row_matcher_.remove_pattern(re->second.matcher_id);
      row_id_name_.erase(re->second.matcher_id);
      row_entries_.erase(re);
    }
  }
  patterns_.erase(it);
}

void BirdBakerEngine::scan_columns(const std::vector<std::uint32_t>& named,
                                   int height, int width, int base_r,
                                   int base_c, const BlockPlan* plan,
                                   std::vector<Occurrence>& out) const {
  std::vector<DynMatcher::Symbol> col(static_cast<std::size_t>(height));
  std::vector<std::pair<int, int>> hits;
  for (int c = m_bar_ - 1; c < width; ++c) {
    for (int r = 0; r < height; ++r)
      col[static_cast<std::size_t>(r)] =
          named[static_cast<std::size_t>(r) * width + c];
    col_matcher_.scan(col, hits);
    for (const auto& [e, cid] : hits) {
      const int pid = col_id_pattern_.at(cid);
      const int h = static_cast<int>(patterns_.at(pid).names.size());
      const int grow = base_r + e - h;
      const int gcol = base_c + c + 1 - m_bar_;
      if (plan && !plan->attributed(base_r, base_c, grow, gcol)) continue;
      out.push_back(Occurrence{pid, grow, gcol});
    }
  }
}

std::vector<Occurrence> BirdBakerEngine::search_linear(
    const TextGrid& text) const {
  std::vector<Occurrence> out;
  const int n1 = text.height(), n2 = text.width();
  if (patterns_.empty() || n1 == 0 || n2 < m_bar_) return out;
  std::vector<std::uint32_t> named(static_cast<std::size_t>(n1) * n2, 0);
  std::vector<DynMatcher::Symbol> line(static_cast<std::size_t>(n2));
  std::vector<std::pair<int, int>> hits;
  if (counters_)
    counters_->observe_transient(static_cast<std::uint64_t>(n1) * n2 + n2 +
                                 n1);
  for (int r = 0; r < n1; ++r) {
    const std::string& row = text.rows[static_cast<std::size_t>(r)];
    for (int c = 0; c < n2; ++c)
      line[static_cast<std::size_t>(c)] =
          static_cast<unsigned char>(row[static_cast<std::size_t>(c)]);
    row_matcher_.scan(line, hits);
    for (const auto& [e, mid] : hits)
      named[static_cast<std::size_t>(r) * n2 + e - 1] = row_id_name_.at(mid);
  }
  scan_columns(named, n1, n2, 1, 1, nullptr, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Occurrence> BirdBakerEngine::search_blocked(
    const TextGrid& text, const RowIndex& rows, const BlockPlan& plan,
    bool dedup) const {
  std::vector<Occurrence> out;
  const int n1 = text.height(), n2 = text.width();
  if (patterns_.empty() || n1 == 0 || n2 < m_bar_) return out;
  std::vector<std::uint32_t> named;
  std::vector<std::uint32_t> buf;
  plan.for_each_block(n1, n2, [&](int br, int bc, int h, int w) {
    if (w < m_bar_) return;
    named.assign(static_cast<std::size_t>(h) * w, 0);
    if (counters_)
      counters_->observe_transient(static_cast<std::uint64_t>(h) * w + w + h);
    for (int i = 0; i < h; ++i) {
      const std::string& row = text.rows[static_cast<std::size_t>(br - 1 + i)];
      rows.name_text_positions(
          std::string_view(row.data() + (bc - 1), static_cast<std::size_t>(w)),
          buf);
      std::copy(buf.begin(), buf.end(),
                named.begin() + static_cast<std::size_t>(i) * w);
    }
    scan_columns(named, h, w, br, bc, dedup ? &plan : nullptr, out);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dict2d
