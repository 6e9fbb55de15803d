#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swa/heavy_path.hpp"
#include "swa/lca.hpp"
#include "swa/rooted_tree.hpp"
#include "swa/small_predecessor.hpp"

namespace swa {

// (node, depth): the shallowest explicit node whose string depth is at
// least `depth` on some root path. depth 0 means the root.
struct Locus {
  node_id node = 0;
  std::uint32_t depth = 0;
  friend bool operator==(const Locus&, const Locus&) = default;
};

struct MatchingStatistics {
  std::vector<std::uint32_t> length;  // longest prefix of P[i..] found in the index
  std::vector<Locus> locus;
};

// Suffix tree of one text, or generalized suffix tree of a dictionary,
// built from a suffix array and LCP array.
//
// Symbols: byte b is b+2. A single text of two or more bytes whose last
// byte is unique and smaller than all others already ends in a sentinel; otherwise a sentinel
// (symbol 1) is added. In a dictionary every document is followed by its
// own sentinel 258+i, so every position of the concatenation is a leaf and
// leaf depths stop at the owning document's sentinel.
//
// Nodes are numbered in preorder with children in lexicographic order;
// node 0 is the root.
class SuffixTree {
 public:
  SuffixTree() = default;

  // Throws std::invalid_argument on empty input.
  static SuffixTree build(std::string_view text);
  static SuffixTree build_generalized(std::span<const std::string> documents);

  const RootedTree& tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return tree_.size(); }
  node_id root() const noexcept { return 0; }
  bool is_leaf(node_id v) const noexcept { return tree_.is_leaf(v); }
  std::uint32_t string_depth(node_id v) const noexcept { return depth_[v]; }
  std::size_t leaf_count() const noexcept { return sa_.size(); }

  bool generalized() const noexcept { return !doc_end_.empty(); }
  std::size_t document_count() const noexcept { return generalized() ? doc_end_.size() : 1; }
  // Length of the indexed byte text (single text: |X| as given).
  std::size_t text_length() const noexcept { return text_length_; }
  bool has_added_sentinel() const noexcept { return added_sentinel_; }

  // 0-based start of the suffix spelled by a leaf, and the leaf of a suffix.
  std::uint32_t suffix_start(node_id leaf) const noexcept { return sa_[left_[leaf]]; }
  node_id leaf_of_suffix(std::uint32_t start) const noexcept { return leaf_of_[start]; }
  // Document (0-based) owning a leaf; 0 for a single text.
  std::uint32_t document_of(node_id leaf) const;

  // Symbol at 0-based string depth `offset` on the path to v.
  std::uint32_t symbol_at(node_id v, std::uint32_t offset) const noexcept {
    return text_[sa_[left_[v]] + offset];
  }
  // Child of v whose edge starts with `symbol`, or no_node.
  node_id child(node_id v, std::uint32_t symbol) const noexcept;
  // Internal nodes only; the root links to itself.
  node_id suffix_link(node_id v) const noexcept { return link_[v]; }
  std::uint32_t sa_left(node_id v) const noexcept { return left_[v]; }
  std::uint32_t sa_right(node_id v) const noexcept { return right_[v]; }

  // Bytes spelled from the root to v, stopping at the first sentinel.
  std::string label(node_id v) const;
  static std::uint32_t symbol_of(unsigned char c) noexcept { return std::uint32_t{c} + 2; }

  // Shallowest ancestor-or-self of x with string depth >= length;
  // requires 1 <= length <= string_depth(x) (std::out_of_range otherwise).
  node_id weighted_ancestor(node_id x, std::uint32_t length) const;
  // Locus of X[i..j], 1-based inclusive; single texts only.
  Locus locus_of_substring(std::size_t i, std::size_t j) const;

  MatchingStatistics matching_statistics(std::string_view pattern) const;

  std::vector<weight_t> leaf_count_weights() const;
  // Throws std::logic_error on a single-text tree.
  std::vector<weight_t> document_frequency_weights() const;

  const LcaStructure& lca() const noexcept { return lca_; }
  std::size_t space_bytes() const noexcept;

 private:
  void build_from(std::vector<std::uint32_t> symbols, std::uint32_t alphabet);
  std::uint32_t leaf_depth(std::uint32_t start) const noexcept;

  std::vector<std::uint32_t> text_;      // symbols, one per leaf
  std::vector<std::uint32_t> doc_end_;   // position of each document's sentinel
  std::size_t text_length_ = 0;
  bool added_sentinel_ = false;

  std::vector<std::uint32_t> sa_;
  std::vector<node_id> leaf_of_;
  RootedTree tree_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<node_id> link_;
  LcaStructure lca_;
  HeavyPathDecomposition hpd_;
  SmallPredecessorForest wa_sets_;  // per heavy path: keys are path start depths
};

}  // namespace swa
