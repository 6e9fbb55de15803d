#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle_helpers.hpp"
#include "swa/generators.hpp"
#include "swa/heavy_path.hpp"
#include "swa/lca.hpp"
#include "swa/rooted_tree.hpp"
#include "swa/tree_io.hpp"

using namespace swa;
using swa::testing::dfs_sizes;
using swa::testing::is_ancestor;
using swa::testing::walk_lca;

TEST_CASE("golden tree structure") {
  const auto wt = swa::testing::golden_tree();
  const auto& t = wt.tree;
  CHECK(t.size() == 16);
  CHECK(t.root() == 5);  // u6
  const auto sizes = compute_sizes(t);
  CHECK(sizes[4] == 9);  // u5
  CHECK(sizes[t.root()] == 16);
  CHECK(std::equal(sizes.begin(), sizes.end(), wt.weights.begin()));
  CHECK_FALSE(validate_weights(t, wt.weights));

  const HeavyPathDecomposition hpd(t);
  const auto root_path = hpd.path(hpd.path_of(t.root()));
  const std::vector<node_id> expected{0, 1, 2, 3, 4, 5};
  CHECK(std::vector<node_id>(root_path.begin(), root_path.end()) == expected);
  CHECK(hpd.path_of(t.root()) == 0);
  CHECK(hpd.position(4) == 5);
  CHECK(representative_leaf(t, hpd)[5] == 0);
  CHECK(hpd.path_count() == t.leaf_count());
}

TEST_CASE("build_tree from 1-based links") {
  const std::vector<ParentLink> single{{1, std::nullopt}};
  CHECK(build_tree(single).size() == 1);

  const std::vector<ParentLink> cycle{{1, std::nullopt}, {2, 3}, {3, 2}};
  CHECK_THROWS_AS(build_tree(cycle), tree_error);
  try {
    build_tree(cycle);
  } catch (const tree_error& e) {
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
  const std::vector<ParentLink> two_roots{{1, std::nullopt}, {2, std::nullopt}};
  CHECK_THROWS_AS(build_tree(two_roots), tree_error);
  const std::vector<ParentLink> dangling{{1, std::nullopt}, {2, 7}};
  CHECK_THROWS_AS(build_tree(dangling), tree_error);
  CHECK_THROWS_AS(RootedTree::from_parents({}), tree_error);
}

TEST_CASE("tree file errors carry line numbers") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_weighted_tree(in);
  };
  CHECK_NOTHROW(parse("1\n1 0 1\n"));
  try {
    parse("3\n1 0 3\n2 1 1\n3 x 1\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
  try {
    parse("3\n1 0 3\n2 3 1\n3 2 1\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() >= 3);
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("2\n1 0 2\n"), parse_error);
  CHECK_THROWS_AS(parse("2\n1 0 2\n1 0 2\n"), parse_error);
  CHECK_THROWS_AS(parse(""), parse_error);

  const auto wt = swa::testing::golden_tree();
  std::ostringstream out;
  write_weighted_tree(out, wt.tree, wt.weights);
  const auto back = parse(out.str());
  CHECK(std::vector<node_id>(back.tree.parents().begin(), back.tree.parents().end()) ==
        std::vector<node_id>(wt.tree.parents().begin(), wt.tree.parents().end()));
  CHECK(back.weights == wt.weights);
}

TEST_CASE("weight validation reports the rule") {
  const auto wt = swa::testing::golden_tree();
  auto w = wt.weights;
  w[0] = 2;  // leaf u1 heavier than its size
  auto v = validate_weights(wt.tree, w);
  REQUIRE(v);
  CHECK(v->node == 0);
  CHECK(v->rule == WeightRule::size_bound);

  w = wt.weights;
  w[10] = 1;  // node 11 drops below its child 12 (weight 2)
  v = validate_weights(wt.tree, w);
  REQUIRE(v);
  CHECK(v->rule == WeightRule::max_heap);

  w = wt.weights;
  w[7] = 0;
  v = validate_weights(wt.tree, w);
  REQUIRE(v);
  CHECK(v->rule == WeightRule::positive);
  CHECK_THROWS_AS(require_valid_weights(wt.tree, w), weight_error);
}

TEST_CASE("basic shapes") {
  std::mt19937_64 rng(1);
  const auto path = gen::random_tree(gen::TreeFamily::path, 50, rng);
  const HeavyPathDecomposition hp(path);
  CHECK(hp.path_count() == 1);
  CHECK(hp.length(0) == 50);

  const auto star = gen::random_tree(gen::TreeFamily::star, 50, rng);
  const HeavyPathDecomposition hs(star);
  CHECK(hs.path_count() == 49);
  CHECK(hs.length(hs.path_of(star.root())) == 2);
}

TEST_CASE("random trees: sizes, heavy edges, path bound, representatives") {
  std::mt19937_64 rng(99);
  for (auto family : gen::kAllFamilies) {
    for (std::size_t n : {1u, 2u, 3u, 17u, 500u, 4096u}) {
      CAPTURE(gen::name(family));
      CAPTURE(n);
      const auto t = gen::random_tree(family, n, rng);
      const auto sizes = compute_sizes(t);
      if (n <= 500) REQUIRE(sizes == dfs_sizes(t));
      REQUIRE(sizes[t.root()] == n);

      std::size_t child_total = 0;
      for (node_id v = 0; v < n; ++v) child_total += t.children(v).size();
      REQUIRE(child_total == n - 1);

      const HeavyPathDecomposition hpd(t, sizes);
      REQUIRE(hpd.path_count() == t.leaf_count());
      std::vector<int> seen(n, 0);
      for (path_id p = 0; p < hpd.path_count(); ++p) {
        REQUIRE(t.is_leaf(hpd.bottom(p)));
        const auto nodes = hpd.path(p);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
          ++seen[nodes[i]];
          REQUIRE(hpd.path_of(nodes[i]) == p);
          REQUIRE(hpd.position(nodes[i]) == i + 1);
          if (i + 1 < nodes.size()) {
            // nodes[i] is the heavy child of nodes[i+1]
            REQUIRE(t.parent(nodes[i]) == nodes[i + 1]);
            for (node_id sib : t.children(nodes[i + 1])) REQUIRE(sizes[nodes[i]] >= sizes[sib]);
          }
        }
      }
      REQUIRE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));

      // Heavy paths met on any root-to-leaf path.
      const double bound = std::log2(static_cast<double>(n)) + 2;
      for (node_id leaf = 0; leaf < n; ++leaf) {
        if (!t.is_leaf(leaf)) continue;
        std::size_t paths = 0;
        for (node_id v = leaf; v != no_node; v = t.parent(hpd.top(hpd.path_of(v)))) ++paths;
        REQUIRE(static_cast<double>(paths) <= bound);
      }

      const auto rep = representative_leaf(t, hpd);
      for (node_id v = 0; v < n; ++v) {
        REQUIRE(t.is_leaf(rep[v]));
        REQUIRE(is_ancestor(t, v, rep[v]));
      }
    }
  }
}

TEST_CASE("top weights nondecreasing toward the root") {
  std::mt19937_64 rng(5);
  for (auto family : gen::kAllFamilies) {
    for (auto scheme : gen::kAllSchemes) {
      const auto t = gen::random_tree(family, 300, rng);
      const auto w = gen::random_weights(t, scheme, rng);
      REQUIRE_FALSE(validate_weights(t, w));
      const HeavyPathDecomposition hpd(t);
      for (node_id leaf = 0; leaf < t.size(); ++leaf) {
        if (!t.is_leaf(leaf)) continue;
        weight_t last = 0;
        for (node_id v = leaf; v != no_node; v = t.parent(hpd.top(hpd.path_of(v)))) {
          const weight_t top = w[hpd.top(hpd.path_of(v))];
          REQUIRE(top >= last);
          last = top;
        }
      }
    }
  }
}

TEST_CASE("lca equals the ancestor walk on all pairs") {
  std::mt19937_64 rng(8);
  for (auto family : gen::kAllFamilies) {
    for (std::size_t n : {1u, 2u, 65u, 130u, 300u}) {
      const auto t = gen::random_tree(family, n, rng);
      const LcaStructure lca(t);
      for (node_id u = 0; u < n; ++u) {
        for (node_id v = 0; v < n; ++v) REQUIRE(lca.lca(u, v) == walk_lca(t, u, v));
      }
    }
  }
  const auto wt = swa::testing::golden_tree();
  const LcaStructure lca(wt.tree);
  CHECK(lca.lca(3, 3) == 3);
  CHECK(lca.lca(0, 6) == 2);    // u1 and a light child of u3
  CHECK(lca.lca(0, 13) == 5);   // deep in u6's light subtree
  CHECK_THROWS_AS(lca.lca(0, 16), std::out_of_range);
}

TEST_CASE("block rmq matches a scan") {
  std::mt19937_64 rng(4);
  std::vector<std::uint32_t> a(700);
  for (auto& x : a) x = static_cast<std::uint32_t>(rng() % 50);
  const BlockRmq rmq(a);
  for (std::size_t l = 0; l < a.size(); l += 3) {
    for (std::size_t r = l; r < a.size(); r += 5) {
      const auto m = *std::min_element(a.begin() + l, a.begin() + r + 1);
      REQUIRE(a[rmq.argmin(l, r)] == m);
    }
  }
}
