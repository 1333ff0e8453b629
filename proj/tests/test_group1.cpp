#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "dict2d/core.hpp"
#include "dict2d/counters.hpp"
#include "dict2d/group1.hpp"
#include "dict2d/periodicity.hpp"
#include "dict2d/witness_tree.hpp"
#include "test_util.hpp"

using namespace dict2d;

namespace {

struct Harness {
  Counters counters;
  WitnessTree classes{&counters};
  BlockClassNamer namer;
  Group1Engine engine{&counters, classes, namer};
  std::vector<PatternMatrix> dict;

  void add(const PatternMatrix& p) {
    REQUIRE(classify_pattern(p).small_periods);
    engine.add_pattern(p);
    dict.push_back(p);
  }
  void remove(int id) {
    engine.remove_pattern(id);
    std::erase_if(dict, [&](const PatternMatrix& p) { return p.id == id; });
  }
  // Whole text as one block; only valid when width <= ceil(3*m/2).
  std::vector<Occurrence> search(const TextGrid& text,
                                 Group1Verify mode = Group1Verify::kAuto,
                                 Group1Diag* diag = nullptr) const {
    std::vector<std::string_view> rows(text.rows.begin(), text.rows.end());
    std::vector<Occurrence> out;
    engine.search_block(rows, text.width(), out, mode, diag);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Width-w row reading the pattern row's period string at a phase shift, so
// conjugate classes line up at predictable columns.
std::string conjugate_tiling(std::string_view pattern_row, int w, int shift) {
  const int p = compute_period(pattern_row);
  std::string s;
  s.reserve(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i)
    s.push_back(pattern_row[static_cast<std::size_t>((i + shift) % p)]);
  return s;
}

}  // namespace

TEST_CASE("stripe patterns on a stripe block: all alignments recovered") {
  Harness hx;
  hx.add(PatternMatrix{1, {"abababab", "babababa"}});
  hx.add(PatternMatrix{2, {"babababa", "abababab"}});
  const TextGrid text{{"abababababab", "babababababa", "abababababab"}};
  const std::vector<Occurrence> want{
      {1, 1, 1}, {2, 1, 2}, {1, 1, 3}, {2, 1, 4}, {1, 1, 5},
      {2, 2, 1}, {1, 2, 2}, {2, 2, 3}, {1, 2, 4}, {2, 2, 5}};
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  Group1Diag diag;
  CHECK(hx.search(text, Group1Verify::kAuto, &diag) == sorted_want);
  // both patterns share one class column, so the name matcher proposes each
  // of the two top rows once per pattern: four candidates, none wasted
  CHECK(diag.candidates == 4);
  CHECK(hx.search(text, Group1Verify::kCongruenceOnly) == sorted_want);
  CHECK(naive_search(hx.dict, text) == sorted_want);

  hx.remove(1);
  const std::vector<Occurrence> only2{
      {2, 1, 2}, {2, 1, 4}, {2, 2, 1}, {2, 2, 3}, {2, 2, 5}};
  CHECK(hx.search(text) == only2);
  CHECK_THROWS(hx.engine.remove_pattern(1));
  CHECK(hx.engine.has_pattern(2));
  hx.remove(2);
  CHECK(hx.engine.empty());
}

TEST_CASE("rows unknown to the dictionary cannot carry an occurrence") {
  Harness hx;
  hx.add(PatternMatrix{1, {"aaaaaaaa", "abababab"}});
  // row 2: window period 3 exceeds the threshold 2, row stays unclassified
  const TextGrid reject{
      {"aaaaaaaaaaaa", "aabaabaabaab", "abababababab", "aaaaaaaaaaaa"}};
  CHECK(hx.search(reject).empty());
  // row 2: period 2, but its conjugacy class names no dictionary row
  const TextGrid unknown{
      {"aaaaaaaaaaaa", "acacacacacac", "abababababab", "aaaaaaaaaaaa"}};
  CHECK(hx.search(unknown).empty());
  const TextGrid hit{
      {"aaaaaaaaaaaa", "abababababab", "aabaabaabaab", "aaaaaaaaaaaa"}};
  CHECK(hx.search(hit) ==
        std::vector<Occurrence>{{1, 1, 1}, {1, 1, 3}, {1, 1, 5}});
}

TEST_CASE("fast verification agrees with row-by-row congruences and the "
          "reference matcher") {
  testing::Rng rng(101);
  for (int round = 0; round < 120; ++round) {
    const int m = 4 * testing::rand_int(rng, 2, 4);  // 8, 12, 16
    const int w = testing::rand_int(rng, m, (3 * m + 1) / 2);
    Harness hx;
    const int d = testing::rand_int(rng, 1, 4);
    for (int i = 1; i <= d; ++i)
      hx.add(PatternMatrix{
          i, testing::small_period_matrix(rng, testing::rand_int(rng, 1, 6), m,
                                          m / 4, 2)});
    const int n1 = testing::rand_int(rng, 1, 28);
    TextGrid text;
    for (int y = 0; y < n1; ++y) {
      const int kind = testing::rand_int(rng, 0, 5);
      if (kind <= 2) {
        const auto& p = hx.dict[static_cast<std::size_t>(
            testing::rand_int(rng, 0, d - 1))];
        const auto& row = p.rows[static_cast<std::size_t>(
            testing::rand_int(rng, 0, p.height() - 1))];
        text.rows.push_back(
            conjugate_tiling(row, w, testing::rand_int(rng, 0, m - 1)));
      } else if (kind <= 4) {
        text.rows.push_back(
            testing::periodic_row(rng, w, testing::rand_int(rng, 1, m / 4), 2));
      } else {
        text.rows.push_back(testing::random_row(rng, w, 2));
      }
    }
    for (int k = 0; k < 2; ++k) {
      const auto& p = hx.dict[static_cast<std::size_t>(
          testing::rand_int(rng, 0, d - 1))];
      if (p.height() <= n1)
        testing::plant(text, p.rows,
                       testing::rand_int(rng, 1, n1 - p.height() + 1),
                       testing::rand_int(rng, 1, w - m + 1));
    }
    const auto want = naive_search(hx.dict, text);
    Group1Diag diag;
    CHECK(hx.search(text, Group1Verify::kAuto, &diag) == want);
    CHECK(hx.search(text, Group1Verify::kCongruenceOnly) == want);
    // every reported (pattern, top row) pair stems from a distinct candidate
    std::vector<std::pair<int, int>> tops;
    for (const auto& o : want) tops.emplace_back(o.pattern, o.row);
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
    CHECK(diag.candidates >= tops.size());
  }
}

TEST_CASE("tall vertically periodic patterns: chunked verification agrees") {
  testing::Rng rng(103);
  for (int round = 0; round < 25; ++round) {
    const int m = 8;
    const int w = testing::rand_int(rng, m, 12);
    Harness hx;
    const int pi = testing::rand_int(rng, 1, 3);
    const int h = testing::rand_int(rng, 2 * m + 1, 2 * m + 8);  // tall
    hx.add(PatternMatrix{
        1, testing::tall_periodic_matrix(rng, h, m, pi, m / 4, 2)});
    if (testing::rand_int(rng, 0, 1))
      hx.add(PatternMatrix{
          2, testing::tall_periodic_matrix(rng, h + pi, m, pi, m / 4, 2)});
    const int n1 = testing::rand_int(rng, h + pi, 3 * h);
    TextGrid text;
    // mostly a vertical tiling of the first pattern, with corrupted rows
    const auto& base = hx.dict.front().rows;
    for (int y = 0; y < n1; ++y)
      text.rows.push_back(conjugate_tiling(
          base[static_cast<std::size_t>(y % static_cast<int>(base.size()))], w,
          0));
    for (int k = 0, rot = testing::rand_int(rng, 0, 3); k < rot; ++k)
      text.rows[static_cast<std::size_t>(
          testing::rand_int(rng, 0, n1 - 1))] = testing::random_row(rng, w, 2);
    for (const auto& p : hx.dict)
      if (p.height() <= n1)
        testing::plant(text, p.rows,
                       testing::rand_int(rng, 1, n1 - p.height() + 1),
                       testing::rand_int(rng, 1, w - m + 1));
    const auto want = naive_search(hx.dict, text);
    CHECK(hx.search(text, Group1Verify::kAuto) == want);
    CHECK(hx.search(text, Group1Verify::kCongruenceOnly) == want);
  }
}

TEST_CASE("row-period least common multiples beyond the cap still verify") {
  // periods 5, 7, 4: lcm 140 exceeds the 2m cap of 56, so alignment falls
  // back to checking the one surviving column directly
  const int m = 28, w = 40;
  const std::string r5 = conjugate_tiling("aaaab", m, 0);
  const std::string r7 = conjugate_tiling("aaaaaab", m, 0);
  const std::string r4 = conjugate_tiling("aaab", m, 0);
  Harness hx;
  hx.add(PatternMatrix{1, {r5, r7, r4}});
  testing::Rng rng(107);
  for (int round = 0; round < 30; ++round) {
    TextGrid text{std::vector<std::string>(
        static_cast<std::size_t>(testing::rand_int(rng, 3, 10)),
        std::string(static_cast<std::size_t>(w), 'a'))};
    for (int k = 0, plants = testing::rand_int(rng, 1, 3); k < plants; ++k)
      testing::plant(text, hx.dict.front().rows,
                     testing::rand_int(rng, 1, text.height() - 2),
                     testing::rand_int(rng, 1, w - m + 1));
    const auto want = naive_search(hx.dict, text);
    CHECK(hx.search(text, Group1Verify::kAuto) == want);
    CHECK(hx.search(text, Group1Verify::kCongruenceOnly) == want);
  }
}
