#include "dict2d/suffix_tree.hpp"

#include <cassert>

namespace dict2d {

int GeneralizedSuffixTree::new_leaf(std::int64_t pos) {
  nodes_.emplace_back();
  Node& leaf = nodes_.back();
  leaf.edge_sid = cur_sid_;
  leaf.edge_start = pos;
  leaf.edge_end = kOpen;
  leaf.leaf_sid = cur_sid_;
  leaf.leaf_off = pos - remainder_ + 1;
  leaf_at_[static_cast<size_t>(cur_sid_)][static_cast<size_t>(leaf.leaf_off)] =
      static_cast<int>(nodes_.size()) - 1;
  return static_cast<int>(nodes_.size()) - 1;
}

int GeneralizedSuffixTree::new_internal(int sid, std::int64_t start,
                                        std::int64_t end, std::int64_t depth) {
  nodes_.emplace_back();
  Node& n = nodes_.back();
  n.edge_sid = sid;
  n.edge_start = start;
  n.edge_end = end;
  n.str_depth = depth;
  return static_cast<int>(nodes_.size()) - 1;
}

void GeneralizedSuffixTree::extend(std::int64_t c, std::int64_t pos) {
  ++remainder_;
  int need_link = 0;  // 0 = root = "none pending"
  auto link_to = [&](int v) {
    if (need_link != 0) nodes_[static_cast<size_t>(need_link)].slink = v;
    need_link = v;
  };
  while (remainder_ > 0) {
    bump_tau(1);
    if (active_len_ == 0) active_edge_ = pos;
    const std::int64_t edge_c =
        sym(cur_sid_, active_edge_);  // active path is a suffix of cur string
    Node& anode = nodes_[static_cast<size_t>(active_node_)];
    auto it = anode.next.find(edge_c);
    if (it == anode.next.end()) {
      int leaf = new_leaf(pos);
      nodes_[static_cast<size_t>(leaf)].parent = active_node_;
      nodes_[static_cast<size_t>(active_node_)].next.emplace(edge_c, leaf);
      link_to(active_node_);
    } else {
      int nxt = it->second;
      const std::int64_t elen = edge_length(nxt);
      if (active_len_ >= elen) {  // skip/count down
        active_node_ = nxt;
        active_edge_ += elen;
        active_len_ -= elen;
        continue;
      }
      if (edge_sym(nxt, active_len_) == c) {  // already present: stop phase
        ++active_len_;
        link_to(active_node_);
        break;
      }
      // split the edge at active_len_
      Node& nxt_node = nodes_[static_cast<size_t>(nxt)];
      const std::int64_t depth =
          nodes_[static_cast<size_t>(active_node_)].str_depth + active_len_;
      int split = new_internal(nxt_node.edge_sid, nxt_node.edge_start,
                               nxt_node.edge_start + active_len_, depth);
      int leaf = new_leaf(pos);
      Node& split_node = nodes_[static_cast<size_t>(split)];
      Node& nxt2 = nodes_[static_cast<size_t>(nxt)];  // re-ref after growth
      split_node.parent = active_node_;
      nxt2.edge_start += active_len_;
      nxt2.parent = split;
      nodes_[static_cast<size_t>(leaf)].parent = split;
      split_node.next.emplace(sym(nxt2.edge_sid, nxt2.edge_start), nxt);
      split_node.next.emplace(c, leaf);
      nodes_[static_cast<size_t>(active_node_)].next[edge_c] = split;
      link_to(split);
    }
    --remainder_;
    if (active_node_ == 0 && active_len_ > 0) {
      --active_len_;
      active_edge_ = pos - remainder_ + 1;
    } else if (active_node_ != 0) {
      active_node_ = nodes_[static_cast<size_t>(active_node_)].slink;
    }
  }
}

int GeneralizedSuffixTree::add_string(std::span<const std::int64_t> content) {
  cur_sid_ = static_cast<int>(strings_.size());
  strings_.emplace_back();
  auto& s = strings_.back();
  s.reserve(content.size() + 1);
  leaf_at_.emplace_back(content.size() + 1, -1);
  active_node_ = 0;
  active_edge_ = 0;
  active_len_ = 0;
  remainder_ = 0;
  for (size_t i = 0; i <= content.size(); ++i) {
    const std::int64_t c = i < content.size()
                               ? content[i]
                               : -(static_cast<std::int64_t>(cur_sid_) + 1);
    assert(i < content.size() ? c >= 0 : c < 0);
    s.push_back(c);
    extend(c, static_cast<std::int64_t>(i));
  }
  // the unique sentinel forces every pending suffix into an explicit leaf
  assert(remainder_ == 0);
  int sid = cur_sid_;
  cur_sid_ = -1;
  return sid;
}

int GeneralizedSuffixTree::depth_of(int v) const {
  int d = 0;
  while (nodes_[static_cast<size_t>(v)].parent >= 0) {
    v = nodes_[static_cast<size_t>(v)].parent;
    ++d;
  }
  return d;
}

std::int64_t GeneralizedSuffixTree::lcp_suffixes(int sa, std::int64_t offa,
                                                 int sb,
                                                 std::int64_t offb) const {
  int la = leaf_at_[static_cast<size_t>(sa)][static_cast<size_t>(offa)];
  int lb = leaf_at_[static_cast<size_t>(sb)][static_cast<size_t>(offb)];
  assert(la >= 0 && lb >= 0);
  if (la == lb)
    return static_cast<std::int64_t>(strings_[static_cast<size_t>(sa)].size()) -
           offa;
  int da = depth_of(la), db = depth_of(lb);
  bump_tau(static_cast<std::uint64_t>(da + db));
  while (da > db) {
    la = nodes_[static_cast<size_t>(la)].parent;
    --da;
  }
  while (db > da) {
    lb = nodes_[static_cast<size_t>(lb)].parent;
    --db;
  }
  while (la != lb) {
    la = nodes_[static_cast<size_t>(la)].parent;
    lb = nodes_[static_cast<size_t>(lb)].parent;
  }
  return nodes_[static_cast<size_t>(la)].str_depth;
}

std::int64_t GeneralizedSuffixTree::match_length(
    std::span<const std::int64_t> symbols) const {
  int v = 0;
  std::int64_t matched = 0;
  size_t i = 0;
  while (i < symbols.size()) {
    auto it = nodes_[static_cast<size_t>(v)].next.find(symbols[i]);
    if (it == nodes_[static_cast<size_t>(v)].next.end()) break;
    int child = it->second;
    const std::int64_t elen = edge_length(child);
    std::int64_t k = 0;
    while (k < elen && i < symbols.size() && edge_sym(child, k) == symbols[i]) {
      ++k;
      ++i;
      ++matched;
    }
    if (k < elen) break;
    v = child;
  }
  return matched;
}

bool GeneralizedSuffixTree::Walker::try_extend(std::int64_t c) {
  if (off_ == 0) {
    const auto& next = tree_.nodes_[static_cast<size_t>(base_)].next;
    auto it = next.find(c);
    if (it == next.end()) return false;
    edge_ = it->second;
    off_ = 1;
  } else {
    if (tree_.edge_sym(edge_, off_) != c) return false;
    ++off_;
  }
  if (off_ == tree_.edge_length(edge_)) {
    // only internal edges can be exhausted by sentinel-free input
    base_ = edge_;
    edge_ = -1;
    off_ = 0;
  }
  ++len_;
  return true;
}

void GeneralizedSuffixTree::Walker::relocate() {
  // Drop the leading symbol of the current match. The tail gamma below the
  // branching ancestor re-descends via skip/count over stored edge labels;
  // the input is never re-read.
  assert(len_ > 0);
  int gsid = -1;
  std::int64_t gstart = 0, glen = 0;
  if (off_ > 0) {
    const Node& e = tree_.nodes_[static_cast<size_t>(edge_)];
    gsid = e.edge_sid;
    gstart = e.edge_start;
    glen = off_;
  }
  int v = base_;
  if (v == 0) {
    // locus hangs below the root: gamma loses its first symbol instead
    ++gstart;
    --glen;
  } else {
    v = tree_.nodes_[static_cast<size_t>(v)].slink;
    tree_.bump_tau(1);
  }
  base_ = v;
  edge_ = -1;
  off_ = 0;
  std::int64_t consumed = 0;
  while (consumed < glen) {
    tree_.bump_tau(1);
    const std::int64_t a = tree_.sym(gsid, gstart + consumed);
    int child = tree_.nodes_[static_cast<size_t>(base_)].next.at(a);
    const std::int64_t elen = tree_.edge_length(child);
    if (glen - consumed >= elen) {
      base_ = child;
      consumed += elen;
    } else {
      edge_ = child;
      off_ = glen - consumed;
      consumed = glen;
    }
  }
  --len_;
}

std::int64_t GeneralizedSuffixTree::Walker::feed(std::int64_t c) {
  if (tree_.counters_) tree_.counters_->ms_inspections += 1;
  while (true) {
    if (try_extend(c)) break;
    if (len_ == 0) break;  // at root with nothing matched: stay
    relocate();
  }
  return len_;
}

int GeneralizedSuffixTree::Walker::full_sid() const {
  if (target_ == 0 || len_ != target_) return -1;
  if (off_ > 0) {
    // mid-edge: only this string's own sentinel can follow a full match
    if (tree_.edge_sym(edge_, off_) >= 0) return -1;
    return tree_.nodes_[static_cast<size_t>(edge_)].edge_sid;
  }
  const auto& next = tree_.nodes_[static_cast<size_t>(base_)].next;
  if (next.empty()) return -1;
  auto it = next.begin();  // sentinels are negative, so they sort first
  if (it->first >= 0) return -1;
  return tree_.nodes_[static_cast<size_t>(it->second)].edge_sid;
}

}  // namespace dict2d
