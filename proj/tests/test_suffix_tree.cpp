#include <algorithm>
#include <numeric>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "swa/generators.hpp"
#include "swa/oracles.hpp"
#include "swa/suffix_array.hpp"
#include "swa/suffix_tree.hpp"

using namespace swa;

namespace {

const std::vector<std::string> kGoldenDictionary = {"a", "ananan", "baba", "ban", "banna", "nana"};

// Locus by walking down from the root comparing bytes of s.
node_id walk_locus(const SuffixTree& st, std::string_view s) {
  node_id v = st.root();
  while (st.string_depth(v) < s.size()) {
    v = st.child(v, SuffixTree::symbol_of(static_cast<unsigned char>(s[st.string_depth(v)])));
    if (v == no_node) return no_node;
  }
  return st.label(v).substr(0, s.size()) == s ? v : no_node;
}

std::size_t longest_match(std::string_view text, std::string_view p) {
  for (std::size_t len = p.size(); len > 0; --len) {
    if (text.find(p.substr(0, len)) != std::string_view::npos) return len;
  }
  return 0;
}

void check_structure(const SuffixTree& st) {
  const auto& t = st.tree();
  REQUIRE(st.string_depth(st.root()) == 0);
  REQUIRE(st.size() <= 2 * st.leaf_count() - 1 + (st.leaf_count() == 1));
  std::size_t leaves = 0;
  for (node_id v = 0; v < st.size(); ++v) {
    if (t.is_leaf(v)) {
      ++leaves;
      continue;
    }
    if (v != st.root() || st.leaf_count() > 1) REQUIRE(t.children(v).size() >= 2);
    for (node_id c : t.children(v)) REQUIRE(st.string_depth(c) > st.string_depth(v));
    if (v != st.root()) REQUIRE(st.string_depth(st.suffix_link(v)) == st.string_depth(v) - 1);
    // Children sorted by first symbol.
    const auto kids = t.children(v);
    for (std::size_t i = 1; i < kids.size(); ++i) {
      REQUIRE(st.symbol_at(kids[i - 1], st.string_depth(v)) < st.symbol_at(kids[i], st.string_depth(v)));
    }
  }
  REQUIRE(leaves == st.leaf_count());
}

}  // namespace

TEST_CASE("suffix array against sorting") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 1 + rng() % 80;
    const std::uint32_t sigma = 1 + static_cast<std::uint32_t>(rng() % 4);
    std::vector<std::uint32_t> s(len);
    for (auto& c : s) c = 1 + static_cast<std::uint32_t>(rng() % sigma);
    s.push_back(0);
    const auto sa = suffix_array(s, sigma + 1);
    std::vector<std::uint32_t> want(s.size());
    std::iota(want.begin(), want.end(), 0u);
    std::sort(want.begin(), want.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
    });
    REQUIRE(sa == want);
    const auto lcp = lcp_array(s, sa);
    for (std::size_t i = 1; i < sa.size(); ++i) {
      std::uint32_t h = 0;
      while (sa[i] + h < s.size() && sa[i - 1] + h < s.size() && s[sa[i] + h] == s[sa[i - 1] + h]) ++h;
      REQUIRE(lcp[i] == h);
    }
  }
  CHECK_THROWS_AS(suffix_array(std::vector<std::uint32_t>{1, 2}, 3), std::invalid_argument);
}

TEST_CASE("CAGAGA$") {
  const auto st = SuffixTree::build("CAGAGA$");
  CHECK(st.leaf_count() == 7);
  CHECK_FALSE(st.has_added_sentinel());
  check_structure(st);
  const auto w = st.leaf_count_weights();
  const node_id a = walk_locus(st, "A");
  REQUIRE(a != no_node);
  CHECK(w[a] == 3);
  CHECK(w[st.root()] == 7);
  for (std::uint32_t p = 0; p < 7; ++p) CHECK(st.suffix_start(st.leaf_of_suffix(p)) == p);

  const auto ag = st.locus_of_substring(2, 3);
  CHECK(ag.depth == 2);
  CHECK(st.label(ag.node).substr(0, 2) == "AG");
  CHECK(ag.node == walk_locus(st, "AG"));
  CHECK(st.locus_of_substring(4, 4).depth == 1);
  CHECK_THROWS_AS(st.locus_of_substring(0, 2), std::out_of_range);
  CHECK_THROWS_AS(st.locus_of_substring(3, 2), std::out_of_range);
  CHECK_THROWS_AS(st.locus_of_substring(1, 8), std::out_of_range);
  CHECK_THROWS_AS(st.document_frequency_weights(), std::logic_error);
  CHECK_THROWS_AS(SuffixTree::build(""), std::invalid_argument);
}

TEST_CASE("unary text") {
  CHECK(SuffixTree::build("a").leaf_count() == 2);
  CHECK(SuffixTree::build("ba").leaf_count() == 2);
  CHECK(SuffixTree::build("ab").leaf_count() == 3);
  const auto st = SuffixTree::build("AAAAAAAA");
  CHECK(st.has_added_sentinel());
  CHECK(st.leaf_count() == 9);
  check_structure(st);
  // Internal nodes form a single chain.
  for (node_id v = 0; v < st.size(); ++v) {
    std::size_t internal_kids = 0;
    for (node_id c : st.tree().children(v)) internal_kids += !st.is_leaf(c);
    CHECK(internal_kids <= 1);
  }
}

TEST_CASE("random texts: spelled suffixes, loci, weights, matching statistics") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const std::size_t len = 1 + rng() % 200;
    const std::size_t sigma = t % 2 ? 2 : 4;
    const auto x = gen::random_string(len, sigma, rng);
    const auto st = SuffixTree::build(x);
    const std::size_t ends = st.has_added_sentinel() ? len + 1 : len;
    REQUIRE(st.leaf_count() == ends);
    check_structure(st);

    // Leaves in preorder spell the suffixes in sorted order.
    std::vector<std::string> suffixes;
    for (std::size_t p = 0; p < ends; ++p) suffixes.push_back(x.substr(p));
    std::sort(suffixes.begin(), suffixes.end());
    std::vector<std::string> spelled;
    for (node_id v = 0; v < st.size(); ++v) {
      if (st.is_leaf(v)) spelled.push_back(st.label(v));
    }
    REQUIRE(spelled == suffixes);

    const auto w = st.leaf_count_weights();
    REQUIRE_FALSE(validate_weights(st.tree(), w));
    for (node_id v = 0; v < st.size(); ++v) {
      std::uint32_t leaves = 0;
      for (node_id u = v; u < st.size() && (u == v || st.tree().depth(u) > st.tree().depth(v)); ++u) {
        leaves += st.is_leaf(u);
      }
      REQUIRE(w[v] == leaves);
      const auto lbl = st.label(v);
      if (v != st.root() && lbl.size() == st.string_depth(v)) REQUIRE(w[v] == oracle::count_occurrences(x, lbl));
    }

    if (len <= 60) {
      for (std::size_t i = 1; i <= len; ++i) {
        for (std::size_t j = i; j <= len; ++j) {
          const auto loc = st.locus_of_substring(i, j);
          REQUIRE(loc.node == walk_locus(st, x.substr(i - 1, j - i + 1)));
          REQUIRE(st.string_depth(st.tree().parent(loc.node)) < loc.depth);
          REQUIRE(loc.depth <= st.string_depth(loc.node));
        }
      }
    }

    const auto p = gen::random_string(1 + rng() % 80, sigma + 1, rng);
    const auto ms = st.matching_statistics(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      REQUIRE(ms.length[i] == longest_match(x, std::string_view(p).substr(i)));
      if (i + 1 < p.size()) REQUIRE(ms.length[i + 1] + 1 >= ms.length[i]);
      if (ms.length[i] > 0) {
        REQUIRE(ms.locus[i].node == walk_locus(st, p.substr(i, ms.length[i])));
      } else {
        REQUIRE(ms.locus[i].node == st.root());
      }
    }
  }
}

TEST_CASE("matching statistics of the text itself") {
  const std::string x = "mississippi";
  const auto st = SuffixTree::build(x);
  const auto ms = st.matching_statistics(x);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(ms.length[i] == x.size() - i);
  const auto miss = st.matching_statistics("sz");
  CHECK(miss.length[1] == 0);
  CHECK(miss.length[0] == 1);
}

TEST_CASE("generalized suffix tree of the example dictionary") {
  const auto gst = SuffixTree::build_generalized(kGoldenDictionary);
  CHECK(gst.document_count() == 6);
  check_structure(gst);
  std::size_t total = 0;
  for (const auto& d : kGoldenDictionary) total += d.size() + 1;
  CHECK(gst.leaf_count() == total);
  const auto df = gst.document_frequency_weights();
  const node_id an = walk_locus(gst, "an");
  REQUIRE(an != no_node);
  CHECK(df[an] == 4);
  CHECK(df[gst.root()] == 6);
  CHECK_THROWS_AS(SuffixTree::build_generalized(std::vector<std::string>{}), std::invalid_argument);

  const std::vector<std::string> one{"banana"};
  const auto single = SuffixTree::build_generalized(one);
  const auto plain = SuffixTree::build("banana");
  CHECK(single.size() == plain.size());
}

TEST_CASE("random dictionaries: every document suffix once, frequencies") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + rng() % 8;
    std::vector<std::string> docs;
    for (std::size_t i = 0; i < d; ++i) docs.push_back(gen::random_string(rng() % 30, 2 + t % 3, rng));
    const auto gst = SuffixTree::build_generalized(docs);
    check_structure(gst);

    std::multiset<std::pair<std::uint32_t, std::string>> want, got;
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::size_t p = 0; p <= docs[i].size(); ++p) want.insert({i, docs[i].substr(p)});
    }
    for (node_id v = 0; v < gst.size(); ++v) {
      if (gst.is_leaf(v)) got.insert({gst.document_of(v), gst.label(v)});
    }
    REQUIRE(got == want);

    const auto df = gst.document_frequency_weights();
    REQUIRE_FALSE(validate_weights(gst.tree(), df));
    for (node_id v = 1; v < gst.size(); ++v) {
      std::set<std::uint32_t> seen;
      for (node_id u = v; u < gst.size() && (u == v || gst.tree().depth(u) > gst.tree().depth(v)); ++u) {
        if (gst.is_leaf(u)) seen.insert(gst.document_of(u));
      }
      REQUIRE(df[v] == seen.size());
      const auto lbl = gst.label(v);
      if (lbl.size() == gst.string_depth(v)) REQUIRE(df[v] == oracle::count_documents(docs, lbl));
    }

    const auto p = gen::random_string(1 + rng() % 40, 3, rng);
    const auto ms = gst.matching_statistics(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::size_t best = 0;
      for (const auto& doc : docs) best = std::max(best, longest_match(doc, std::string_view(p).substr(i)));
      REQUIRE(ms.length[i] == best);
    }
  }
}
