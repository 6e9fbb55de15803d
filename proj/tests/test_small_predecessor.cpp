#include <random>
#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "swa/small_predecessor.hpp"

using swa::PredecessorHit;
using swa::SmallEntry;
using swa::SmallPredecessorForest;
using swa::SmallPredecessorSet;

namespace {

std::optional<PredecessorHit> scan_pred(const std::vector<SmallEntry>& e, std::uint64_t q) {
  std::optional<PredecessorHit> best;
  for (const auto& x : e) {
    if (x.key <= q && (!best || x.key > best->key)) best = PredecessorHit{x.key, x.payload};
  }
  return best;
}

std::optional<PredecessorHit> scan_succ(const std::vector<SmallEntry>& e, std::uint64_t q) {
  std::optional<PredecessorHit> best;
  for (const auto& x : e) {
    if (x.key >= q && (!best || x.key < best->key)) best = PredecessorHit{x.key, x.payload};
  }
  return best;
}

std::vector<SmallEntry> distinct_entries(std::size_t m, std::uint32_t max_key, std::mt19937_64& rng) {
  std::set<std::uint32_t> keys;
  std::uniform_int_distribution<std::uint32_t> d(1, max_key);
  while (keys.size() < m) keys.insert(d(rng));
  std::vector<SmallEntry> out;
  std::uint32_t p = 0;
  for (auto k : keys) out.push_back({k, p++, 0});
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("three keys") {
  const SmallPredecessorSet s({{3, 0, 0}, {7, 1, 0}, {20, 2, 0}});
  CHECK(s.size() == 3);
  CHECK(s.predecessor(7)->key == 7);
  CHECK_FALSE(s.predecessor(2));
  CHECK(s.predecessor(100)->key == 20);
  CHECK(s.successor(8)->key == 20);
  CHECK(s.successor(3)->key == 3);
  CHECK_FALSE(s.successor(21));
}

TEST_CASE("keep-deepest duplicate policy") {
  const SmallPredecessorSet s({{5, 10, 1}, {5, 20, 4}, {5, 30, 2}});
  REQUIRE(s.size() == 1);
  CHECK(s.predecessor(5)->payload == 20);
  CHECK(s.successor(1)->payload == 20);
}

TEST_CASE("invalid sets") {
  CHECK_THROWS_AS(SmallPredecessorSet({{0, 0, 0}}), std::invalid_argument);
  std::vector<SmallEntry> big;
  for (std::uint32_t k = 1; k <= 10; ++k) big.push_back({k, k, 0});
  CHECK_THROWS_AS(SmallPredecessorSet(big, 9), std::invalid_argument);
  CHECK_NOTHROW(SmallPredecessorSet(big, 10));
  const SmallPredecessorSet empty(std::vector<SmallEntry>{});
  CHECK_FALSE(empty.predecessor(5));
  CHECK_FALSE(empty.successor(0));
}

TEST_CASE("exhaustive against a scan for sets up to 256 keys") {
  std::mt19937_64 rng(17);
  for (std::size_t m = 0; m <= 256; ++m) {
    const std::uint32_t max_key = static_cast<std::uint32_t>(m * 3 + 5);
    const auto e = distinct_entries(m, max_key, rng);
    const SmallPredecessorSet s(e);
    REQUIRE(s.size() == m);
    for (std::uint64_t q = 0; q <= max_key + 1; ++q) {
      REQUIRE(s.predecessor(q) == scan_pred(e, q));
      REQUIRE(s.successor(q) == scan_succ(e, q));
      const auto p = s.predecessor(q);
      const auto n = s.successor(q + 1);
      if (p && n) REQUIRE(p->key < n->key);
    }
  }
}

TEST_CASE("forest answers like independent sets") {
  std::mt19937_64 rng(23);
  SmallPredecessorForest forest;
  std::vector<std::vector<SmallEntry>> sets;
  for (int i = 0; i < 200; ++i) {
    sets.push_back(distinct_entries(rng() % 40, 1000, rng));
    REQUIRE(forest.add(sets.back()) == static_cast<std::uint32_t>(i));
  }
  forest.shrink_to_fit();
  std::size_t total = 0;
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    REQUIRE(forest.set_size(i) == sets[i].size());
    total += sets[i].size();
    for (std::uint64_t q = 0; q <= 1001; q += 7) {
      REQUIRE(forest.predecessor(i, q) == scan_pred(sets[i], q));
      REQUIRE(forest.successor(i, q) == scan_succ(sets[i], q));
    }
  }
  CHECK(forest.total_entries() == total);
  CHECK(forest.set_count() == sets.size());
}
