#include "dict2d/row_index.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace dict2d {

namespace {

std::vector<std::int64_t> to_symbols(std::string_view row) {
  std::vector<std::int64_t> sym(row.size());
  for (std::size_t i = 0; i < row.size(); ++i)
    sym[i] = static_cast<unsigned char>(row[i]);
  return sym;
}

}  // namespace

std::uint32_t RowIndex::insert_row(std::string_view row) {
  if (row.empty()) throw std::invalid_argument("empty row");
  if (width_ == 0) width_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != width_)
    throw std::invalid_argument("row width differs from the dictionary's");
  auto it = name_of_content_.find(std::string(row));
  if (it != name_of_content_.end()) {
    ++recs_[it->second].count;
    return it->second;
  }
  const std::uint32_t name = next_name_++;
  const int sid = tree_.add_string(to_symbols(row));
  if (static_cast<std::size_t>(sid) >= sid_name_.size())
    sid_name_.resize(static_cast<std::size_t>(sid) + 1, 0);
  sid_name_[static_cast<std::size_t>(sid)] = name;
  recs_[name] = Rec{1, sid};
  name_of_content_.emplace(std::string(row), name);
  return name;
}

void RowIndex::remove_row(std::uint32_t name) {
  auto it = recs_.find(name);
  if (it == recs_.end()) throw std::invalid_argument("unknown row name");
  if (--it->second.count > 0) return;
  name_of_content_.erase(row_string(name));
  sid_name_[static_cast<std::size_t>(it->second.sid)] = 0;
  recs_.erase(it);
  ++dead_;
  if (2 * dead_ > recs_.size()) rebuild();
  if (recs_.empty()) width_ = 0;
}

void RowIndex::rebuild() {
  std::vector<std::pair<std::uint32_t, int>> live;
  live.reserve(recs_.size());
  for (const auto& [name, rec] : recs_) live.emplace_back(name, rec.sid);
  std::sort(live.begin(), live.end());
  GeneralizedSuffixTree fresh(counters_);
  std::vector<std::uint32_t> names;
  names.reserve(live.size());
  std::vector<std::vector<std::int64_t>> contents;
  contents.reserve(live.size());
  for (const auto& [name, sid] : live) {
    contents.push_back(std::vector<std::int64_t>(tree_.content(sid).begin(),
                                                 tree_.content(sid).end()));
    names.push_back(name);
  }
  sid_name_.assign(1, 0);
  for (std::size_t k = 0; k < contents.size(); ++k) {
    const int sid = fresh.add_string(contents[k]);
    if (static_cast<std::size_t>(sid) >= sid_name_.size())
      sid_name_.resize(static_cast<std::size_t>(sid) + 1, 0);
    sid_name_[static_cast<std::size_t>(sid)] = names[k];
    recs_[names[k]].sid = sid;
  }
  tree_ = std::move(fresh);
  dead_ = 0;
  ++rebuilds_;
}

unsigned char RowIndex::access_char(std::uint32_t name, int i) const {
  auto it = recs_.find(name);
  if (it == recs_.end()) throw std::invalid_argument("unknown row name");
  const auto content = tree_.content(it->second.sid);
  if (i < 1 || static_cast<std::size_t>(i) > content.size())
    throw std::out_of_range("row offset");
  if (counters_) ++counters_->tau;
  return static_cast<unsigned char>(content[static_cast<std::size_t>(i - 1)]);
}

std::int64_t RowIndex::lcp_rows(std::uint32_t a, int i, std::uint32_t b,
                                int j) const {
  auto ia = recs_.find(a);
  auto ib = recs_.find(b);
  if (ia == recs_.end() || ib == recs_.end())
    throw std::invalid_argument("unknown row name");
  if (i < 1 || i > width_ || j < 1 || j > width_)
    throw std::out_of_range("row offset");
  const std::int64_t raw =
      tree_.lcp_suffixes(ia->second.sid, i - 1, ib->second.sid, j - 1);
  return std::min({raw, static_cast<std::int64_t>(width_ - i + 1),
                   static_cast<std::int64_t>(width_ - j + 1)});
}

void RowIndex::name_text_positions(std::string_view line,
                                   std::vector<std::uint32_t>& out) const {
  out.assign(line.size(), 0);
  if (width_ == 0 || line.size() < static_cast<std::size_t>(width_)) return;
  GeneralizedSuffixTree::Walker walker(tree_, width_);
  for (std::size_t k = 0; k < line.size(); ++k) {
    const std::int64_t len =
        walker.feed(static_cast<unsigned char>(line[k]));
    if (len == width_) {
      const int sid = walker.full_sid();
      if (sid >= 0) out[k] = sid_name_[static_cast<std::size_t>(sid)];
    }
  }
}

int RowIndex::ref_count(std::uint32_t name) const {
  auto it = recs_.find(name);
  return it == recs_.end() ? 0 : it->second.count;
}

std::string RowIndex::row_string(std::uint32_t name) const {
  auto it = recs_.find(name);
  if (it == recs_.end()) throw std::invalid_argument("unknown row name");
  const auto content = tree_.content(it->second.sid);
  std::string s;
  s.reserve(content.size());
  for (const std::int64_t c : content) s.push_back(static_cast<char>(c));
  return s;
}

}  // namespace dict2d
