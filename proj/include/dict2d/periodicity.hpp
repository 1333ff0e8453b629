#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dict2d/core.hpp"

namespace dict2d {

using u128 = unsigned __int128;

// Per-row description used by the small-period engine. For pattern rows,
// lwpos is relative (1 <= lwpos <= period) and left/right are unused. For
// text block rows, lwpos/left/right are absolute block columns and
// class_name is 0 when the row's conjugacy class is not in the dictionary.
struct RowMeta {
  std::uint32_t class_name = 0;
  int period = 0;
  int lwpos = 0;
  int left = 0;
  int right = 0;
};

struct CanonizedRow {
  RowMeta meta;          // class_name left 0; caller names it
  std::string canonical; // least rotation of the period, tiled to |row|
};

// Smallest period of s (|s| - longest proper border). compute_period("") == 0.
int compute_period(std::string_view s);

// Booth's algorithm: 0-based index where the least rotation of s starts
// (smallest index on ties). Linear time.
int least_rotation_index(std::string_view s);

// Smallest period p, the least rotation of s[0..p) tiled to |s|, and the
// first 1-based position of that rotation inside s (1 <= lwpos <= p). Two
// rows canonize equal iff their period strings are conjugate.
CanonizedRow canonize_row(std::string_view row);

struct Classification {
  bool small_periods = false;  // every row period <= floor(width/4)
  int filter_row = 0;          // else: first 1-based row above the threshold
};
Classification classify_pattern(const PatternMatrix& p);

// Prefix LCMs of row periods, capped: any value exceeding `cap` is stored as
// kInfinity and stays there. values[i] covers rows 1..i (values[0] == 1).
struct LcmTable {
  static constexpr std::int64_t kInfinity = -1;
  std::int64_t cap = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(int i) const { return values[static_cast<size_t>(i)]; }
};
LcmTable build_lcm_table(std::span<const int> periods, std::int64_t cap);

// Where a stack of periodic rows can be column-aligned. The admissible
// columns c satisfy (c - lwpos_i) mod p_i == residues[i] for every row;
// they form the progression { z + t*modulus }. `z` is the smallest positive
// solution, residues are the lexicographically least achievable vector.
struct CanonicalSignature {
  std::vector<int> residues;
  u128 z = 1;
  u128 modulus = 1;
  bool overflow = false;  // modulus would not fit; callers must fall back

  bool same_class(const CanonicalSignature& o) const {
    return !overflow && !o.overflow && residues == o.residues;
  }
};

// Progressive narrowing: one CRT merge per row, scanning at most the row's
// residues implicitly (the compatible residue is forced by the gcd); never
// enumerates [1, L].
CanonicalSignature canonical_signature(std::span<const RowMeta> metas);

// Dictionary-global naming of p_block equivalence classes. Keys combine the
// chunk's row class names with the signature residues; ids are never reused
// or renumbered on removal.
class BlockClassNamer {
 public:
  using Key = std::vector<std::uint64_t>;

  std::uint32_t name(const Key& key) {
    auto [it, inserted] = names_.try_emplace(key, next_);
    if (inserted) ++next_;
    return it->second;
  }
  std::optional<std::uint32_t> lookup(const Key& key) const {
    auto it = names_.find(key);
    if (it == names_.end()) return std::nullopt;
    return it->second;
  }
  size_t size() const { return names_.size(); }

 private:
  std::map<Key, std::uint32_t> names_;
  std::uint32_t next_ = 1;
};

// One pi-row chunk of a vertically periodic pattern (or of a text run).
struct PBlockToken {
  std::uint32_t block_class = 0;  // 0: class unknown to the dictionary
  bool has_delta = false;         // false for the first token
  u128 delta_z = 0;               // (z - previous z) mod modulus
  CanonicalSignature sig;
};

// Splits metas into floor(|metas|/pi) chunks of pi rows (tail rows are the
// caller's problem) and names each chunk. When `assign_names` is false the
// namer is only consulted, never grown (text-side tokenization).
std::vector<PBlockToken> tokenize_pblocks(std::span<const RowMeta> metas,
                                          int pi, BlockClassNamer& namer,
                                          bool assign_names);

}  // namespace dict2d
