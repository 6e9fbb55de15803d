#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "swa/rooted_tree.hpp"

namespace swa {

enum class ArtLevel : std::uint8_t { top, middle, bottom };

// A node may sit in a micro-tree of a level only if its subtree has at most
// `leaves` leaves, at most `nodes` nodes and weight at most `weight`. All
// three bounds shrink going down the tree, so the qualifying nodes form
// whole subtrees.
struct LevelCaps {
  std::uint32_t leaves = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t nodes = std::numeric_limits<std::uint32_t>::max();
  weight_t weight = std::numeric_limits<weight_t>::max();
};

// Partition of a tree into a top tree (upward closed) and micro-trees.
// Micro-trees are listed with their nodes in preorder; their first node is
// the micro-tree root.
struct ArtDecomposition {
  std::vector<ArtLevel> level;
  std::vector<std::uint32_t> micro_of;  // micro-tree id, or no_node for top nodes
  std::vector<ArtLevel> micro_level;
  std::vector<std::uint32_t> offsets{0};
  std::vector<node_id> nodes;

  std::size_t micro_count() const noexcept { return offsets.size() - 1; }
  node_id micro_root(std::uint32_t m) const noexcept { return nodes[offsets[m]]; }
  std::span<const node_id> micro_nodes(std::uint32_t m) const noexcept {
    return {nodes.data() + offsets[m], offsets[m + 1] - offsets[m]};
  }
  // Top nodes none of whose children are top nodes.
  std::size_t top_leaf_count(const RootedTree& tree) const;
};

// Bottom trees are rooted at the minimal-depth nodes with at most chi leaves
// below them; every other node is in the top tree.
ArtDecomposition art_decompose(const RootedTree& tree, std::uint32_t chi);

// Two levels: nodes meeting `bottom` form bottom trees, nodes meeting only
// `middle` form middle trees (the upper part of each middle-level subtree),
// the rest is the top tree. `bottom` must be no looser than `middle`.
ArtDecomposition art_decompose_two_level(const RootedTree& tree, std::span<const weight_t> weights,
                                         const LevelCaps& middle, const LevelCaps& bottom);

}  // namespace swa
