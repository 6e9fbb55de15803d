#include <functional>
#include <random>
#include <set>
#include <thread>

#include "doctest.h"
#include "fixtures.hpp"
#include "swa/art_decomposition.hpp"
#include "swa/contracted_tree.hpp"
#include "swa/generators.hpp"
#include "swa/micro_tree.hpp"
#include "swa/oracles.hpp"
#include "swa/swa_linear.hpp"

using namespace swa;

namespace {

std::vector<std::uint32_t> leaf_counts(const RootedTree& t) {
  std::vector<std::uint32_t> c(t.size(), 0);
  const auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (t.is_leaf(*it)) c[*it] = 1;
    if (t.parent(*it) != no_node) c[t.parent(*it)] += c[*it];
  }
  return c;
}

MicroTree random_micro(std::size_t s, weight_t max_w, std::mt19937_64& rng) {
  MicroTree m;
  m.parent.resize(s);
  m.weight.resize(s);
  m.parent[0] = no_node;
  for (std::size_t v = 1; v < s; ++v) m.parent[v] = static_cast<std::uint32_t>(rng() % v);
  for (std::size_t v = 0; v < s; ++v) m.weight[v] = 1 + static_cast<weight_t>(rng() % max_w);
  return m;
}

// Same tree with children listed in a different order.
MicroTree shuffled_copy(const MicroTree& m, std::mt19937_64& rng) {
  const std::size_t s = m.size();
  std::vector<std::vector<std::uint32_t>> kids(s);
  for (std::size_t v = 1; v < s; ++v) kids[m.parent[v]].push_back(static_cast<std::uint32_t>(v));
  for (auto& k : kids) std::shuffle(k.begin(), k.end(), rng);
  MicroTree out;
  std::vector<std::uint32_t> new_id(s);
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    new_id[v] = static_cast<std::uint32_t>(out.parent.size());
    out.parent.push_back(v == 0 ? no_node : new_id[m.parent[v]]);
    out.weight.push_back(m.weight[v]);
    for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

}  // namespace

TEST_CASE("chi formula") {
  CHECK(chi_for(1, 1.0) == 1);
  CHECK(chi_for(2, 1.0) == 1);
  CHECK(chi_for(1 << 14, 1.0) == 3);
  CHECK(chi_for(1 << 20, 1.0) == 4);
  CHECK(chi_for(1 << 20, 0.1) == 1);
  CHECK_THROWS_AS(chi_for(100, 0.0), config_error);
}

TEST_CASE("contracted tree") {
  const auto wt = swa::testing::golden_tree();
  const HeavyPathDecomposition hpd(wt.tree);
  const auto c = contract_tree(wt.tree, hpd, wt.weights);
  CHECK(c.tree.size() == wt.tree.leaf_count());
  CHECK(c.tree.root() == hpd.path_of(5));
  CHECK(c.weights[c.tree.root()] == 16);
  for (path_id p = 0; p < c.tree.size(); ++p) {
    if (c.tree.parent(p) != no_node) CHECK(c.weights[p] <= c.weights[c.tree.parent(p)]);
  }

  std::mt19937_64 rng(3);
  const auto path = gen::random_tree(gen::TreeFamily::path, 40, rng);
  const HeavyPathDecomposition ph(path);
  const auto pw = gen::random_weights(path, gen::WeightScheme::size, rng);
  CHECK(contract_tree(path, ph, pw).tree.size() == 1);

  for (auto family : gen::kAllFamilies) {
    const auto t = gen::random_tree(family, 600, rng);
    const auto w = gen::random_weights(t, gen::WeightScheme::random_heap, rng);
    const HeavyPathDecomposition h(t);
    const auto ct = contract_tree(t, h, w);
    REQUIRE(ct.tree.size() == t.leaf_count());
    std::size_t light_edges = 0;
    for (node_id v = 0; v < t.size(); ++v) {
      light_edges += t.parent(v) != no_node && h.path_of(v) != h.path_of(t.parent(v));
    }
    REQUIRE(light_edges == ct.tree.size() - 1);
    for (path_id p = 0; p < ct.tree.size(); ++p) {
      const node_id up = t.parent(h.top(p));
      REQUIRE(ct.tree.parent(p) == (up == no_node ? no_node : h.path_of(up)));
      REQUIRE(ct.weights[p] == w[h.top(p)]);
      if (ct.tree.parent(p) != no_node) REQUIRE(ct.weights[p] <= ct.weights[ct.tree.parent(p)]);
    }
  }
}

TEST_CASE("art_decompose") {
  std::mt19937_64 rng(12);
  const auto small = gen::random_tree(gen::TreeFamily::random_attachment, 30, rng);
  const auto whole = art_decompose(small, static_cast<std::uint32_t>(small.leaf_count()));
  CHECK(whole.micro_count() == 1);
  CHECK(whole.micro_nodes(0).size() == 30);
  CHECK(whole.top_leaf_count(small) == 0);

  const auto star = gen::random_tree(gen::TreeFamily::star, 20, rng);
  const auto sd = art_decompose(star, 1);
  CHECK(sd.micro_count() == 19);
  CHECK(sd.level[star.root()] == ArtLevel::top);

  for (auto family : gen::kAllFamilies) {
    for (std::uint32_t chi : {2u, 4u, 8u}) {
      const auto t = gen::random_tree(family, 1000, rng);
      const auto d = art_decompose(t, chi);
      const auto leaves = leaf_counts(t);
      for (node_id v = 0; v < t.size(); ++v) {
        const node_id p = t.parent(v);
        const bool is_root = d.level[v] == ArtLevel::bottom && (p == no_node || d.level[p] == ArtLevel::top);
        // Bottom roots are exactly the minimal-depth nodes with <= chi leaves.
        REQUIRE(is_root == (leaves[v] <= chi && (p == no_node || leaves[p] > chi)));
        if (d.level[v] == ArtLevel::bottom) REQUIRE(leaves[v] <= chi);
      }
      const std::size_t bound = (t.leaf_count() + chi - 1) / chi + 1;
      REQUIRE(d.top_leaf_count(t) <= bound);
    }
  }
}

TEST_CASE("micro-tree keys") {
  const MicroCaps caps{8, 8};
  const MicroTree one{{no_node}, {1}};
  const auto k1 = encode_micro_tree(one, 0, 1, caps);
  // "10" + one 4-bit weight + 3-bit u + 4-bit k
  CHECK(k1 == "10" "0001" "000" "0001");

  CHECK_THROWS_AS(encode_micro_tree(one, 1, 1, caps), encoding_error);
  CHECK_THROWS_AS(encode_micro_tree(one, 0, 9, caps), encoding_error);
  const MicroTree heavy{{no_node}, {9}};
  CHECK_THROWS_AS(canonicalize(heavy, caps), encoding_error);
  MicroTree big;
  for (int i = 0; i < 9; ++i) {
    big.parent.push_back(i == 0 ? no_node : 0);
    big.weight.push_back(1);
  }
  CHECK_THROWS_AS(canonicalize(big, caps), encoding_error);

  std::mt19937_64 rng(44);
  const MicroCaps wide{16, 6};
  std::vector<MicroTree> trees;
  for (int i = 0; i < 500; ++i) trees.push_back(random_micro(1 + rng() % 6, 3, rng));
  for (int i = 0; i < 500; ++i) {
    const auto copy = shuffled_copy(trees[i], rng);
    REQUIRE(canonicalize(copy, wide).bits == canonicalize(trees[i], wide).bits);
  }
  // Distinct keys unless isomorphic with equal weights; isomorphism checked
  // by comparing sorted nested tuples built independently of the encoder.
  std::function<std::string(const MicroTree&, std::uint32_t)> nest = [&](const MicroTree& m, std::uint32_t v) {
    std::vector<std::string> parts;
    for (std::uint32_t c = 1; c < m.size(); ++c) {
      if (m.parent[c] == v) parts.push_back(nest(m, c));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + std::to_string(m.weight[v]);
    for (auto& p : parts) s += "," + p;
    return s + ")";
  };
  for (int i = 0; i < 500; ++i) {
    for (int j = i + 1; j < 500; ++j) {
      const bool same = nest(trees[i], 0) == nest(trees[j], 0);
      REQUIRE(same == (canonicalize(trees[i], wide).bits == canonicalize(trees[j], wide).bits));
    }
  }
  // u and k are part of the key.
  const auto m = random_micro(5, 4, rng);
  std::set<std::string> keys;
  for (std::uint32_t u = 0; u < 5; ++u) {
    for (weight_t k = 1; k <= 6; ++k) keys.insert(encode_micro_tree(m, u, k, wide));
  }
  CHECK(keys.size() <= 30);
  CHECK(keys.size() >= 6);
}

TEST_CASE("golden query and degenerate trees") {
  const auto wt = swa::testing::golden_tree();
  for (bool eager : {false, true}) {
    LinearOptions o;
    o.epsilon = 1.0;
    o.eager_table = eager;
    const SwaIndexLinear index(wt.tree, wt.weights, o);
    CHECK(index.query(1, 7) == node_id{4});
    CHECK(index.query(1, 2) == node_id{1});
    CHECK_FALSE(index.query(5, 17));
    CHECK_THROWS_AS(index.query(16, 1), std::out_of_range);
    CHECK_THROWS_AS(index.query(0, 0), std::invalid_argument);
  }
  const SwaIndexLinear single(RootedTree::from_parents({no_node}), {1});
  CHECK(single.query(0, 1) == node_id{0});
  CHECK_FALSE(single.query(0, 2));
  LinearOptions bad;
  bad.epsilon = -1;
  CHECK_THROWS_AS(SwaIndexLinear(wt.tree, wt.weights, bad), config_error);
}

TEST_CASE("table budget is enforced") {
  std::mt19937_64 rng(6);
  const auto t = gen::random_tree(gen::TreeFamily::random_binary, 4096, rng);
  const auto w = gen::random_weights(t, gen::WeightScheme::size, rng);
  LinearOptions o;
  o.table_budget_bits = 8;
  CHECK_THROWS_AS(SwaIndexLinear(t, w, o), config_error);
  o.table_budget_bits = 0;
  const SwaIndexLinear ok(t, w, o);
  CHECK(ok.layout().table_bits <= ok.layout().table_budget_bits);
}

TEST_CASE("cross-implementation equivalence with bounded lookups") {
  std::mt19937_64 rng(77);
  for (auto family : gen::kAllFamilies) {
    for (auto scheme : gen::kAllSchemes) {
      for (std::size_t n : {1u, 3u, 40u, 300u, 1024u}) {
        for (double eps : {0.5, 1.0, 1.5}) {
          CAPTURE(gen::name(family));
          CAPTURE(gen::name(scheme));
          CAPTURE(n);
          CAPTURE(eps);
          const auto t = gen::random_tree(family, n, rng);
          const auto w = gen::random_weights(t, scheme, rng);
          LinearOptions o;
          o.epsilon = eps;
          const SwaIndexLinear lin(t, w, o);
          const SwaIndexLog log(t, w);
          const weight_t top = w[t.root()];
          for (node_id u = 0; u < n; ++u) {
            const weight_t step = n > 300 ? std::max<weight_t>(1, top / 40) : 1;
            for (weight_t k = 1; k <= top + 1; k += (k < 8 ? 1 : step)) {
              QueryStats s;
              const auto got = lin.query(u, k, &s);
              REQUIRE(got == log.query(u, k));
              REQUIRE(got == oracle::swa_brute(t, w, u, k));
              REQUIRE(s.table_probes <= 3);
              REQUIRE(s.ranks <= 1);
              REQUIRE(s.selects <= 1);
              REQUIRE(s.lcas <= 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lazy table under concurrent readers") {
  std::mt19937_64 rng(91);
  const auto t = gen::random_tree(gen::TreeFamily::random_attachment, 1 << 14, rng);
  const auto w = gen::random_weights(t, gen::WeightScheme::size, rng);
  const SwaIndexLinear lazy(t, w);
  LinearOptions eager_opts;
  eager_opts.eager_table = true;
  const SwaIndexLinear eager(t, w, eager_opts);
  CHECK(lazy.filled_shapes() == 0);
  std::vector<std::pair<node_id, weight_t>> queries;
  for (int i = 0; i < 20000; ++i) {
    queries.emplace_back(static_cast<node_id>(rng() % t.size()),
                         static_cast<weight_t>(1 + rng() % 64));
  }
  std::vector<std::optional<node_id>> expected;
  for (auto [u, k] : queries) expected.push_back(eager.query(u, k));
  std::atomic<int> mismatches{0};
  std::vector<std::thread> pool;
  for (int th = 0; th < 4; ++th) {
    pool.emplace_back([&, th] {
      for (std::size_t i = th; i < queries.size(); i += 4) {
        if (lazy.query(queries[i].first, queries[i].second) != expected[i]) ++mismatches;
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(mismatches == 0);
  CHECK(lazy.filled_shapes() > 0);
}

TEST_CASE("space stays linear") {
  std::mt19937_64 rng(5);
  std::vector<double> wpn;
  for (int lg : {10, 13, 16}) {
    const auto t = gen::random_tree(gen::TreeFamily::random_attachment, std::size_t{1} << lg, rng);
    const auto w = gen::random_weights(t, gen::WeightScheme::size, rng);
    const SwaIndexLinear index(t, w);
    wpn.push_back(index.space().words_per_node(t.size()));
  }
  CHECK(wpn.back() / wpn.front() <= 1.5);
}
