#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "dict2d/counters.hpp"

namespace dict2d {

// Generalized suffix tree over int64 symbols, built incrementally (Ukkonen).
// Strings are appended one at a time; each is terminated internally by the
// unique sentinel -(sid+1), so every suffix ends at its own leaf and the
// active point drains to the root between strings. Removals are the owner's
// problem (tombstone + rebuild); the tree itself only grows.
class GeneralizedSuffixTree {
 public:
  explicit GeneralizedSuffixTree(Counters* counters = nullptr)
      : counters_(counters) {
    nodes_.emplace_back();  // root
  }

  // Appends content (sentinel added internally). Returns the string id.
  int add_string(std::span<const std::int64_t> content);

  int string_count() const { return static_cast<int>(strings_.size()); }
  // Content symbols, sentinel excluded.
  std::span<const std::int64_t> content(int sid) const {
    const auto& s = strings_[static_cast<size_t>(sid)];
    return std::span<const std::int64_t>(s.data(), s.size() - 1);
  }

  // Length of the longest common prefix of the suffixes starting at 0-based
  // offsets offa/offb of the sentinel-terminated strings sa/sb. Unique
  // sentinels guarantee the result never spans one. Cost O(leaf depth),
  // charged to tau.
  std::int64_t lcp_suffixes(int sa, std::int64_t offa, int sb,
                            std::int64_t offb) const;

  // Longest prefix of `symbols` that occurs somewhere in the tree
  // (test/oracle helper, plain root descend).
  std::int64_t match_length(std::span<const std::int64_t> symbols) const;

  size_t node_count() const { return nodes_.size(); }

  // Streaming matching statistics (suffix-link walk, never restarts at the
  // root). After feed(c), len() is the longest suffix of the fed symbols
  // occurring in the tree; when len() == target and the locus sits on a
  // sentinel boundary, full_sid() names the unique string whose content
  // equals that suffix. Each feed inspects the fed symbol exactly once;
  // relocations re-read stored edge labels, not the input, and their hops
  // are charged to tau.
  class Walker {
   public:
    Walker(const GeneralizedSuffixTree& tree, std::int64_t target)
        : tree_(tree), target_(target) {}

    void reset() {
      base_ = 0;
      edge_ = -1;
      off_ = 0;
      len_ = 0;
    }
    // Feeds one symbol; returns the new matched length.
    std::int64_t feed(std::int64_t c);
    std::int64_t len() const { return len_; }
    // String whose full content the current match equals, or -1.
    int full_sid() const;

   private:
    bool try_extend(std::int64_t c);
    void relocate();

    const GeneralizedSuffixTree& tree_;
    std::int64_t target_;
    int base_ = 0;   // node the locus hangs below
    int edge_ = -1;  // child node owning the partial edge (off_ > 0)
    std::int64_t off_ = 0;
    std::int64_t len_ = 0;
  };

 private:
  friend class Walker;

  static constexpr std::int64_t kOpen = -1;

  struct Node {
    int parent = -1;
    int slink = 0;  // root by default; only internal nodes follow it
    int edge_sid = -1;
    std::int64_t edge_start = 0;
    std::int64_t edge_end = kOpen;  // kOpen: runs to the end of edge_sid
    std::int64_t str_depth = 0;     // internal nodes: path length from root
    int leaf_sid = -1;              // leaves: which suffix this is
    std::int64_t leaf_off = -1;
    std::map<std::int64_t, int> next;
  };

  std::int64_t edge_length(int v) const {
    const Node& n = nodes_[static_cast<size_t>(v)];
    std::int64_t end = n.edge_end == kOpen
                           ? static_cast<std::int64_t>(
                                 strings_[static_cast<size_t>(n.edge_sid)].size())
                           : n.edge_end;
    return end - n.edge_start;
  }
  std::int64_t sym(int sid, std::int64_t pos) const {
    return strings_[static_cast<size_t>(sid)][static_cast<size_t>(pos)];
  }
  std::int64_t edge_sym(int v, std::int64_t k) const {
    const Node& n = nodes_[static_cast<size_t>(v)];
    return sym(n.edge_sid, n.edge_start + k);
  }
  int new_leaf(std::int64_t pos);
  int new_internal(int sid, std::int64_t start, std::int64_t end,
                   std::int64_t depth);
  void extend(std::int64_t c, std::int64_t pos);
  int depth_of(int v) const;
  void bump_tau(std::uint64_t n) const {
    if (counters_) counters_->tau += n;
  }

  std::vector<Node> nodes_;
  std::vector<std::vector<std::int64_t>> strings_;
  // leaf_at_[sid][off] = leaf node for the suffix starting at off
  std::vector<std::vector<int>> leaf_at_;

  // Ukkonen state, valid only while add_string runs.
  int cur_sid_ = -1;
  int active_node_ = 0;
  std::int64_t active_edge_ = 0;
  std::int64_t active_len_ = 0;
  std::int64_t remainder_ = 0;

  Counters* counters_ = nullptr;
};

}  // namespace dict2d
