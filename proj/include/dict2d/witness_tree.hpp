#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dict2d/counters.hpp"

namespace dict2d {

// Names equal-length strings so that equal strings share one name, and a
// mismatch position between any two distinct names can be recovered fast.
// Internal nodes hold a position in [1, m] and branch on the byte found
// there; sibling edges carry distinct labels. Leaves hold a name, a
// refcount and one representative copy of the string.
//
// insert is O(m): the traversal inspects bytes in tree order, then one
// sequential comparison against a leaf representative. remove is O(1):
// decrement, then at zero unlink the leaf and splice its parent if a single
// sibling remains. witness_query walks parent pointers (depths computed on
// demand, so splices need no bookkeeping).
class WitnessTree {
 public:
  explicit WitnessTree(Counters* counters = nullptr) : counters_(counters) {}

  // Name of s, allocating a fresh one for unseen content; refcount +1.
  std::uint32_t insert_string(std::string_view s);
  // Refcount -1; at zero the leaf disappears and the name is dead forever.
  void remove_string(std::uint32_t name);
  // Position in [1, m] where the two named strings differ; m+1 iff a == b.
  int witness_query(std::uint32_t a, std::uint32_t b) const;
  // Lookup without insertion (text-side naming); nullopt when absent.
  std::optional<std::uint32_t> find_string(std::string_view s) const;

  const std::string& representative(std::uint32_t name) const;
  int count(std::uint32_t name) const;
  bool is_live(std::uint32_t name) const { return leaf_of_.count(name) != 0; }
  int m() const { return m_; }
  size_t distinct_names() const { return leaf_of_.size(); }
  size_t node_count() const { return live_nodes_; }

 private:
  struct Node {
    int parent = -1;
    int pos = 0;                    // internal nodes: mismatch position, 1-based
    std::map<char, int> children;   // internal nodes: byte at pos -> child
    std::uint32_t name = 0;         // leaves: name id (internal nodes: 0)
    int count = 0;
    std::string rep;
    bool leaf() const { return name != 0; }
  };

  int new_node();
  void free_node(int idx);
  int depth_of(int idx) const;
  void bump(std::uint64_t n) const {
    if (counters_) counters_->comparisons += n;
  }

  std::vector<Node> nodes_;
  std::vector<int> free_list_;
  std::unordered_map<std::uint32_t, int> leaf_of_;
  int root_ = -1;
  int m_ = 0;
  size_t live_nodes_ = 0;
  std::uint32_t next_name_ = 1;
  Counters* counters_ = nullptr;
};

}  // namespace dict2d
