#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dict2d/core.hpp"
#include "dict2d/counters.hpp"
#include "dict2d/group2.hpp"
#include "dict2d/periodicity.hpp"
#include "dict2d/row_index.hpp"
#include "dict2d/witness_tree.hpp"
#include "test_util.hpp"

using namespace dict2d;

namespace {

struct Harness {
  Counters counters;
  RowIndex rows{&counters};
  WitnessTree witnesses{&counters};
  Group2Engine engine{&counters, witnesses, rows};
  std::vector<PatternMatrix> dict;
  std::map<int, std::vector<std::uint32_t>> names_of;

  void add(const PatternMatrix& p) {
    const Classification cls = classify_pattern(p);
    REQUIRE_FALSE(cls.small_periods);
    std::vector<std::uint32_t> names;
    for (const auto& r : p.rows) names.push_back(rows.insert_row(r));
    engine.add_pattern(p, names, cls.filter_row);
    names_of[p.id] = std::move(names);
    dict.push_back(p);
  }
  void remove(int id) {
    engine.remove_pattern(id);
    for (const auto n : names_of.at(id)) rows.remove_row(n);
    names_of.erase(id);
    std::erase_if(dict, [&](const PatternMatrix& p) { return p.id == id; });
  }
  std::vector<Occurrence> search(const TextGrid& text,
                                 Group2Diag* diag = nullptr) const {
    std::vector<std::string_view> views(text.rows.begin(), text.rows.end());
    std::vector<Occurrence> out;
    engine.search_block(views, text.width(), out, diag);
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

TEST_CASE("vertical row-sequence LCPs with removals and rebuilds") {
  NameSuffixIndex nsi;
  const std::vector<std::uint32_t> s1{1, 2, 3};
  const std::vector<std::uint32_t> s2{2, 3, 4};
  const std::vector<std::uint32_t> s3{1, 2, 3};
  const int h1 = nsi.add_sequence(s1);
  const int h2 = nsi.add_sequence(s2);
  const int h3 = nsi.add_sequence(s3);
  CHECK(nsi.lcp(h1, 1, h3, 1) == 3);  // equal contents, distinct handles
  CHECK(nsi.lcp(h1, 2, h2, 1) == 2);  // "23" vs "234"
  CHECK(nsi.lcp(h1, 1, h2, 1) == 0);
  CHECK(nsi.lcp(h1, 3, h2, 2) == 1);  // "3" vs "34"
  CHECK(nsi.lcp(h1, 4, h2, 1) == 0);  // empty suffix
  CHECK_THROWS(nsi.add_sequence(std::vector<std::uint32_t>{}));
  CHECK_THROWS(nsi.remove_sequence(99));

  std::vector<int> extra;
  for (int i = 0; i < 6; ++i)
    extra.push_back(nsi.add_sequence(std::vector<std::uint32_t>{
        static_cast<std::uint32_t>(10 + i),
        static_cast<std::uint32_t>(20 + i)}));
  const int before = nsi.rebuild_count();
  nsi.remove_sequence(h2);
  nsi.remove_sequence(h3);
  for (const int h : extra) nsi.remove_sequence(h);
  CHECK(nsi.rebuild_count() > before);
  CHECK(nsi.live_count() == 1);
  CHECK(nsi.lcp(h1, 1, h1, 1) == 3);  // the survivor still answers exactly
  CHECK(nsi.lcp(h1, 2, h1, 2) == 2);
}

TEST_CASE("hand-checked block: losers die, winners report, no true kill") {
  Harness hx;
  hx.add(PatternMatrix{1, {"ab", "ba"}});
  hx.add(PatternMatrix{2, {"ba", "ab"}});
  hx.add(PatternMatrix{3, {"ab", "bb"}});  // candidates arise, none real
  const TextGrid text{{"aba", "bab", "aba", "aaa"}};
  const std::vector<Occurrence> want{{1, 1, 1}, {2, 1, 2}, {2, 2, 1},
                                     {1, 2, 2}};
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  Group2Diag diag;
  CHECK(hx.search(text, &diag) == sorted_want);
  CHECK(naive_search(hx.dict, text) == sorted_want);
  CHECK(diag.candidates > 0);
  CHECK(diag.vertical_duels <= diag.candidates);
  // pattern 3's candidates all died, and nothing real was ever killed
  bool p3_killed = false;
  for (const auto& k : diag.killed) {
    if (k.pattern == 3) p3_killed = true;
    CHECK(std::find(sorted_want.begin(), sorted_want.end(), k) ==
          sorted_want.end());
  }
  CHECK(p3_killed);

  hx.remove(3);
  hx.remove(1);
  CHECK(hx.search(text) == std::vector<Occurrence>{{2, 1, 2}, {2, 2, 1}});
  CHECK_THROWS(hx.engine.remove_pattern(1));
}

TEST_CASE("vertically overlapping occurrences of one pattern all surface") {
  Harness hx;
  hx.add(PatternMatrix{1, {"aaaab", "aaaab", "aaaab"}});
  const TextGrid text{std::vector<std::string>(6, "aaaab")};
  const std::vector<Occurrence> want{{1, 1, 1}, {1, 2, 1}, {1, 3, 1},
                                     {1, 4, 1}};
  CHECK(hx.search(text) == want);
}

TEST_CASE("engine output matches the reference matcher under churn") {
  testing::Rng rng(109);
  for (int round = 0; round < 80; ++round) {
    const int m = testing::rand_int(rng, 2, 8);
    Harness hx;
    const int d = testing::rand_int(rng, 1, 4);
    for (int i = 1; i <= d; ++i) {
      PatternMatrix p{i, testing::random_matrix(
                             rng, testing::rand_int(rng, 1, 4), m, 2)};
      // force at least one row whose period exceeds the quarter threshold
      std::string hard(static_cast<std::size_t>(m), 'a');
      hard.back() = 'b';
      p.rows[static_cast<std::size_t>(
          testing::rand_int(rng, 0, p.height() - 1))] = hard;
      hx.add(p);
    }
    if (d > 1 && testing::rand_int(rng, 0, 2) == 0)
      hx.remove(testing::rand_int(rng, 1, d));
    const int n1 = testing::rand_int(rng, 1, 24);
    const int w = testing::rand_int(rng, m, (3 * m + 1) / 2);
    TextGrid text = testing::random_grid(rng, n1, w, 2);
    for (int k = 0; k < 3 && !hx.dict.empty(); ++k) {
      const auto& p = hx.dict[static_cast<std::size_t>(testing::rand_int(
          rng, 0, static_cast<int>(hx.dict.size()) - 1))];
      if (p.height() <= n1)
        testing::plant(text, p.rows,
                       testing::rand_int(rng, 1, n1 - p.height() + 1),
                       testing::rand_int(rng, 1, w - m + 1));
    }
    const auto want = naive_search(hx.dict, text);
    Group2Diag diag;
    CHECK(hx.search(text, &diag) == want);
    // narrow block: each pattern's filter row fits at most 3 times per row
    CHECK(diag.candidates <=
          3 * static_cast<std::uint64_t>(n1) * hx.dict.size());
    CHECK(diag.vertical_duels <= diag.candidates);
    for (const auto& k : diag.killed)
      CHECK(std::find(want.begin(), want.end(), k) == want.end());
  }
}
