#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dict2d {

// Sparse-table range query, O(n log n) build, O(1) query. Cmp picks the
// winner (std::less -> minimum).
template <class T, class Cmp = std::less<T>>
class RangeTable {
 public:
  RangeTable() = default;

  explicit RangeTable(std::span<const T> values, Cmp cmp = Cmp{})
      : cmp_(cmp) {
    const std::size_t n = values.size();
    if (n == 0) return;
    const int levels = std::bit_width(n);
    rows_.resize(static_cast<std::size_t>(levels));
    rows_[0].assign(values.begin(), values.end());
    for (int k = 1; k < levels; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      rows_[static_cast<std::size_t>(k)].resize(n - (half << 1) + 1);
      for (std::size_t i = 0; i + (half << 1) <= n; ++i) {
        const T& a = rows_[static_cast<std::size_t>(k) - 1][i];
        const T& b = rows_[static_cast<std::size_t>(k) - 1][i + half];
        rows_[static_cast<std::size_t>(k)][i] = cmp_(b, a) ? b : a;
      }
    }
  }

  // Winner over the 0-based inclusive range [lo, hi].
  T query(std::size_t lo, std::size_t hi) const {
    const int k = std::bit_width(hi - lo + 1) - 1;
    const T& a = rows_[static_cast<std::size_t>(k)][lo];
    const T& b =
        rows_[static_cast<std::size_t>(k)][hi + 1 - (std::size_t{1} << k)];
    return cmp_(b, a) ? b : a;
  }

 private:
  std::vector<std::vector<T>> rows_;
  Cmp cmp_;
};

}  // namespace dict2d
