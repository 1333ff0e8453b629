#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "dict2d/witness_tree.hpp"
#include "test_util.hpp"

using namespace dict2d;

namespace {

// Position of the first difference, 1-based; |a|+1 when equal.
int first_diff(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return static_cast<int>(i) + 1;
  return static_cast<int>(a.size()) + 1;
}

}  // namespace

TEST_CASE("three strings, two internal mismatch positions") {
  WitnessTree t;
  const auto n1 = t.insert_string("aaaa");
  const auto n2 = t.insert_string("abaa");
  const auto n3 = t.insert_string("abba");
  CHECK(t.m() == 4);
  CHECK(t.distinct_names() == 3);
  // aaaa vs ab.. split at position 2; abaa vs abba at position 3
  CHECK(t.witness_query(n1, n2) == 2);
  CHECK(t.witness_query(n1, n3) == 2);
  CHECK(t.witness_query(n2, n3) == 3);
  CHECK(t.witness_query(n2, n2) == 5);
  CHECK(t.representative(n3) == "abba");
  CHECK(t.find_string("abaa").value() == n2);
  CHECK_FALSE(t.find_string("abab").has_value());
}

TEST_CASE("names are refcounted and dead names stay dead") {
  WitnessTree t;
  const auto a = t.insert_string("abcd");
  CHECK(t.insert_string("abcd") == a);
  CHECK(t.count(a) == 2);
  t.remove_string(a);
  CHECK(t.is_live(a));
  t.remove_string(a);
  CHECK_FALSE(t.is_live(a));
  CHECK_THROWS(t.remove_string(a));
  // same content gets a new name now
  const auto b = t.insert_string("abcd");
  CHECK(b != a);
  // tree is empty after the last removal: width resets
  t.remove_string(b);
  CHECK(t.m() == 0);
  const auto c = t.insert_string("xyz");
  CHECK(t.m() == 3);
  CHECK(t.representative(c) == "xyz");
}

TEST_CASE("single-child parents are spliced out on removal") {
  WitnessTree t;
  const auto n1 = t.insert_string("aaaa");
  const auto n2 = t.insert_string("abaa");
  const auto n3 = t.insert_string("abba");
  t.remove_string(n2);
  // the splice must keep remaining queries exact
  CHECK(t.witness_query(n1, n3) == 2);
  CHECK(t.distinct_names() == 2);
  t.remove_string(n1);
  CHECK(t.witness_query(n3, n3) == 5);
  CHECK(t.find_string("abba").value() == n3);
}

TEST_CASE("randomized interleavings against a mirror map") {
  testing::Rng rng(101);
  for (int round = 0; round < 10; ++round) {
    const int m = testing::rand_int(rng, 1, 9);
    WitnessTree t;
    std::map<std::uint32_t, std::string> live;  // name -> content
    std::map<std::string, std::uint32_t> names;
    std::map<std::uint32_t, int> counts;
    for (int op = 0; op < 300; ++op) {
      const bool do_insert = live.empty() || testing::rand_int(rng, 0, 99) < 55;
      if (do_insert) {
        const std::string s = testing::random_row(rng, m, 2);
        const auto name = t.insert_string(s);
        if (names.count(s)) {
          CHECK(name == names[s]);
        } else {
          for (const auto& [n, c] : live) CHECK(n != name);  // never reused
          names[s] = name;
          live[name] = s;
        }
        ++counts[name];
      } else {
        auto it = live.begin();
        std::advance(it, testing::rand_int(
                             rng, 0, static_cast<int>(live.size()) - 1));
        const auto name = it->first;
        t.remove_string(name);
        if (--counts[name] == 0) {
          names.erase(it->second);
          counts.erase(name);
          live.erase(it);
        }
      }
      CHECK(t.distinct_names() == live.size());
      // node count stays linear in the live set
      CHECK(t.node_count() <= 2 * live.size() + 1);
      // sample some pairs
      if (!live.empty()) {
        for (int s = 0; s < 4; ++s) {
          auto ia = live.begin(), ib = live.begin();
          std::advance(ia, testing::rand_int(
                               rng, 0, static_cast<int>(live.size()) - 1));
          std::advance(ib, testing::rand_int(
                               rng, 0, static_cast<int>(live.size()) - 1));
          const int want = first_diff(ia->second, ib->second);
          if (want == m + 1) {
            CHECK(ia->first == ib->first);
            CHECK(t.witness_query(ia->first, ib->first) == m + 1);
          } else {
            // any genuine mismatch position is a valid witness
            const int got = t.witness_query(ia->first, ib->first);
            REQUIRE(got >= 1);
            REQUIRE(got <= m);
            CHECK(ia->second[static_cast<std::size_t>(got - 1)] !=
                  ib->second[static_cast<std::size_t>(got - 1)]);
          }
        }
      }
    }
  }
}

TEST_CASE("equal strings share a name across internal storage growth") {
  // Five strings shape a tree whose node array sits exactly at a capacity
  // boundary; the next insertion that hangs a fresh leaf off an existing
  // node must not lose the new edge when the array reallocates.
  WitnessTree t;
  for (const std::string s :
       {"acacacac", "bbbbbbbb", "cccccccc", "abababab", "bcbcbcbc"})
    t.insert_string(s);
  const auto a1 = t.insert_string("aaaaaaaa");
  const auto a2 = t.insert_string("aaaaaaaa");
  const auto a3 = t.insert_string("aaaaaaaa");
  CHECK(a1 == a2);
  CHECK(a1 == a3);
  CHECK(t.find_string("aaaaaaaa") == a1);
  CHECK(t.count(a1) == 3);
  CHECK(t.distinct_names() == 6);

  // the same invariant over a long insert-only stream with a wide alphabet
  // (every insert is checked, so any lost edge shows up as a fresh name)
  WitnessTree big;
  testing::Rng rng(2024);
  std::map<std::string, std::uint32_t> seen;
  for (int i = 0; i < 3000; ++i) {
    const std::string s = testing::random_row(rng, 6, 5);
    const auto n = big.insert_string(s);
    auto [it, fresh] = seen.emplace(s, n);
    CHECK(it->second == n);
  }
  CHECK(big.distinct_names() == seen.size());
}
