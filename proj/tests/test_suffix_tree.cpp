#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "dict2d/counters.hpp"
#include "dict2d/suffix_tree.hpp"
#include "test_util.hpp"

using namespace dict2d;

namespace {

std::vector<std::int64_t> sym(const std::string& s) {
  std::vector<std::int64_t> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    v[i] = static_cast<unsigned char>(s[i]);
  return v;
}

std::int64_t lcp_direct(const std::string& a, std::size_t i,
                        const std::string& b, std::size_t j) {
  std::int64_t n = 0;
  while (i < a.size() && j < b.size() && a[i] == b[j]) ++i, ++j, ++n;
  return n;
}

// longest suffix of s[0..k] that occurs as a substring of any word
int best_suffix(const std::vector<std::string>& words, const std::string& s,
                int k) {
  for (int len = k + 1; len >= 1; --len) {
    const std::string needle = s.substr(static_cast<std::size_t>(k - len + 1),
                                        static_cast<std::size_t>(len));
    for (const std::string& w : words)
      if (w.find(needle) != std::string::npos) return len;
  }
  return 0;
}

}  // namespace

TEST_CASE("content round-trips and suffix LCPs match direct comparison") {
  testing::Rng rng(41);
  for (int round = 0; round < 20; ++round) {
    GeneralizedSuffixTree t;
    std::vector<std::string> words;
    const int n = testing::rand_int(rng, 1, 6);
    for (int i = 0; i < n; ++i) {
      std::string w =
          testing::random_row(rng, testing::rand_int(rng, 1, 12), 2);
      const int sid = t.add_string(sym(w));
      CHECK(sid == i);
      words.push_back(std::move(w));
    }
    for (int i = 0; i < n; ++i) {
      const auto c = t.content(i);
      REQUIRE(c.size() == words[static_cast<std::size_t>(i)].size());
      for (std::size_t k = 0; k < c.size(); ++k)
        CHECK(c[k] == static_cast<unsigned char>(
                          words[static_cast<std::size_t>(i)][k]));
    }
    for (int it = 0; it < 200; ++it) {
      const int a = testing::rand_int(rng, 0, n - 1);
      const int b = testing::rand_int(rng, 0, n - 1);
      const auto ia = static_cast<std::size_t>(testing::rand_int(
          rng, 0, static_cast<int>(words[static_cast<std::size_t>(a)].size()) - 1));
      const auto ib = static_cast<std::size_t>(testing::rand_int(
          rng, 0, static_cast<int>(words[static_cast<std::size_t>(b)].size()) - 1));
      const std::int64_t want =
          lcp_direct(words[static_cast<std::size_t>(a)], ia,
                     words[static_cast<std::size_t>(b)], ib);
      std::int64_t got = t.lcp_suffixes(a, static_cast<std::int64_t>(ia), b,
                                        static_cast<std::int64_t>(ib));
      // identical suffixes of the same string measure through the sentinel
      if (a == b && ia == ib)
        CHECK(got == want + 1);
      else
        CHECK(got == want);
    }
  }
}

TEST_CASE("match_length finds the longest prefix present in the tree") {
  GeneralizedSuffixTree t;
  t.add_string(sym("abcab"));
  t.add_string(sym("bca"));
  CHECK(t.match_length(sym("abc")) == 3);
  CHECK(t.match_length(sym("cab")) == 3);
  CHECK(t.match_length(sym("cabx")) == 3);
  CHECK(t.match_length(sym("xabc")) == 0);
  CHECK(t.match_length(sym("bcab")) == 4);
}

TEST_CASE("walker computes matching statistics in one inspection per symbol") {
  testing::Rng rng(43);
  for (int round = 0; round < 25; ++round) {
    Counters counters;
    GeneralizedSuffixTree t(&counters);
    std::vector<std::string> words;
    const int m = testing::rand_int(rng, 1, 8);
    const int n = testing::rand_int(rng, 1, 5);
    for (int i = 0; i < n; ++i) {
      words.push_back(testing::random_row(rng, m, 2));
      t.add_string(sym(words.back()));
    }
    const std::string line =
        testing::random_row(rng, testing::rand_int(rng, 1, 60), 2);
    GeneralizedSuffixTree::Walker walker(t, m);
    const std::uint64_t before = counters.ms_inspections;
    for (int k = 0; k < static_cast<int>(line.size()); ++k) {
      const std::int64_t len =
          walker.feed(static_cast<unsigned char>(line[static_cast<std::size_t>(k)]));
      CHECK(len == best_suffix(words, line, k));
      if (len == m) {
        const int sid = walker.full_sid();
        REQUIRE(sid >= 0);
        CHECK(words[static_cast<std::size_t>(sid)] ==
              line.substr(static_cast<std::size_t>(k - m + 1),
                          static_cast<std::size_t>(m)));
      }
    }
    // each fed symbol is inspected exactly once
    CHECK(counters.ms_inspections - before == line.size());
  }
}

TEST_CASE("walker saturates at the longest stored string") {
  Counters counters;
  GeneralizedSuffixTree t(&counters);
  t.add_string(sym("aaaaaaaa"));
  GeneralizedSuffixTree::Walker w(t, 8);
  std::int64_t len = 0;
  for (int i = 0; i < 20; ++i) {
    len = w.feed('a');
    CHECK(len == std::min<std::int64_t>(i + 1, 8));
  }
  CHECK(len == 8);
  CHECK(w.full_sid() == 0);
  // a miss resets the match to the longest viable suffix (here: none)
  CHECK(w.feed('b') == 0);
  CHECK(w.feed('a') == 1);
}
