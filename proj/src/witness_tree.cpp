#include "dict2d/witness_tree.hpp"

#include <cassert>
#include <stdexcept>

namespace dict2d {

int WitnessTree::new_node() {
  ++live_nodes_;
  if (!free_list_.empty()) {
    int idx = free_list_.back();
    free_list_.pop_back();
    nodes_[static_cast<size_t>(idx)] = Node{};
    return idx;
  }
  nodes_.emplace_back();
  return static_cast<int>(nodes_.size()) - 1;
}

void WitnessTree::free_node(int idx) {
  --live_nodes_;
  free_list_.push_back(idx);
}

std::uint32_t WitnessTree::insert_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("witness tree: empty string");
  if (m_ == 0) m_ = static_cast<int>(s.size());
  if (static_cast<int>(s.size()) != m_)
    throw std::invalid_argument("witness tree: string length != m");

  auto make_leaf = [&](int parent) {
    int idx = new_node();
    Node& leaf = nodes_[static_cast<size_t>(idx)];
    leaf.parent = parent;
    leaf.name = next_name_++;
    leaf.count = 1;
    leaf.rep.assign(s);
    leaf_of_.emplace(leaf.name, idx);
    return idx;
  };

  if (root_ < 0) {
    root_ = make_leaf(-1);
    return nodes_[static_cast<size_t>(root_)].name;
  }

  int cur = root_;
  while (!nodes_[static_cast<size_t>(cur)].leaf()) {
    char c = s[static_cast<size_t>(nodes_[static_cast<size_t>(cur)].pos) - 1];
    bump(1);
    auto it = nodes_[static_cast<size_t>(cur)].children.find(c);
    if (it == nodes_[static_cast<size_t>(cur)].children.end()) {
      // no sibling shares this byte at node.pos: a fresh leaf hangs here
      // (make_leaf may reallocate nodes_, so re-index instead of holding a
      // reference across it)
      int leaf = make_leaf(cur);
      nodes_[static_cast<size_t>(cur)].children.emplace(c, leaf);
      return nodes_[static_cast<size_t>(leaf)].name;
    }
    cur = it->second;
  }

  // Reached a leaf; s agrees with its representative on every position the
  // path inspected, so a sequential comparison finds a genuine mismatch.
  Node& leaf = nodes_[static_cast<size_t>(cur)];
  int mismatch = 0;  // 1-based; 0 = equal
  for (int i = 0; i < m_; ++i) {
    bump(1);
    if (leaf.rep[static_cast<size_t>(i)] != s[static_cast<size_t>(i)]) {
      mismatch = i + 1;
      break;
    }
  }
  if (mismatch == 0) {
    ++leaf.count;
    return leaf.name;
  }

  int split = new_node();
  int fresh = make_leaf(split);
  Node& leaf2 = nodes_[static_cast<size_t>(cur)];  // make_leaf may reallocate
  Node& node = nodes_[static_cast<size_t>(split)];
  node.pos = mismatch;
  node.parent = leaf2.parent;
  node.children.emplace(leaf2.rep[static_cast<size_t>(mismatch) - 1], cur);
  node.children.emplace(s[static_cast<size_t>(mismatch) - 1], fresh);
  if (leaf2.parent >= 0) {
    Node& par = nodes_[static_cast<size_t>(leaf2.parent)];
    for (auto& [label, child] : par.children)
      if (child == cur) {
        child = split;
        break;
      }
  } else {
    root_ = split;
  }
  leaf2.parent = split;
  return nodes_[static_cast<size_t>(fresh)].name;
}

void WitnessTree::remove_string(std::uint32_t name) {
  auto it = leaf_of_.find(name);
  if (it == leaf_of_.end())
    throw std::invalid_argument("witness tree: unknown or dead name");
  int idx = it->second;
  Node& leaf = nodes_[static_cast<size_t>(idx)];
  if (--leaf.count > 0) return;

  leaf_of_.erase(it);
  int parent = leaf.parent;
  if (parent < 0) {
    root_ = -1;
  } else {
    Node& par = nodes_[static_cast<size_t>(parent)];
    for (auto pit = par.children.begin(); pit != par.children.end(); ++pit)
      if (pit->second == idx) {
        par.children.erase(pit);
        break;
      }
    if (par.children.size() == 1) {
      // the node no longer discriminates anything: splice it out
      int orphan = par.children.begin()->second;
      int grand = par.parent;
      nodes_[static_cast<size_t>(orphan)].parent = grand;
      if (grand < 0) {
        root_ = orphan;
      } else {
        Node& g = nodes_[static_cast<size_t>(grand)];
        for (auto& [label, child] : g.children)
          if (child == parent) {
            child = orphan;
            break;
          }
      }
      free_node(parent);
    }
  }
  free_node(idx);
  if (leaf_of_.empty()) m_ = 0;  // empty tree may adopt a new m
}

int WitnessTree::depth_of(int idx) const {
  int d = 0;
  while (nodes_[static_cast<size_t>(idx)].parent >= 0) {
    idx = nodes_[static_cast<size_t>(idx)].parent;
    ++d;
  }
  return d;
}

int WitnessTree::witness_query(std::uint32_t a, std::uint32_t b) const {
  if (a == b) {
    if (leaf_of_.count(a) == 0)
      throw std::invalid_argument("witness tree: unknown or dead name");
    return m_ + 1;
  }
  auto ia = leaf_of_.find(a);
  auto ib = leaf_of_.find(b);
  if (ia == leaf_of_.end() || ib == leaf_of_.end())
    throw std::invalid_argument("witness tree: unknown or dead name");
  int na = ia->second, nb = ib->second;
  int da = depth_of(na), db = depth_of(nb);
  while (da > db) {
    na = nodes_[static_cast<size_t>(na)].parent;
    --da;
  }
  while (db > da) {
    nb = nodes_[static_cast<size_t>(nb)].parent;
    --db;
  }
  while (na != nb) {
    na = nodes_[static_cast<size_t>(na)].parent;
    nb = nodes_[static_cast<size_t>(nb)].parent;
  }
  assert(na >= 0 && !nodes_[static_cast<size_t>(na)].leaf());
  return nodes_[static_cast<size_t>(na)].pos;
}

std::optional<std::uint32_t> WitnessTree::find_string(std::string_view s) const {
  if (root_ < 0 || static_cast<int>(s.size()) != m_) return std::nullopt;
  int cur = root_;
  while (!nodes_[static_cast<size_t>(cur)].leaf()) {
    const Node& node = nodes_[static_cast<size_t>(cur)];
    bump(1);
    auto it = node.children.find(s[static_cast<size_t>(node.pos) - 1]);
    if (it == node.children.end()) return std::nullopt;
    cur = it->second;
  }
  const Node& leaf = nodes_[static_cast<size_t>(cur)];
  bump(s.size());
  if (leaf.rep == s) return leaf.name;
  return std::nullopt;
}

const std::string& WitnessTree::representative(std::uint32_t name) const {
  auto it = leaf_of_.find(name);
  if (it == leaf_of_.end())
    throw std::invalid_argument("witness tree: unknown or dead name");
  return nodes_[static_cast<size_t>(it->second)].rep;
}

int WitnessTree::count(std::uint32_t name) const {
  auto it = leaf_of_.find(name);
  if (it == leaf_of_.end())
    throw std::invalid_argument("witness tree: unknown or dead name");
  return nodes_[static_cast<size_t>(it->second)].count;
}

}  // namespace dict2d
