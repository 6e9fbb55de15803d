#include "swa/art_decomposition.hpp"

#include <stdexcept>

namespace swa {
namespace {

struct SubtreeCounts {
  std::vector<std::uint32_t> leaves;
  std::vector<std::uint32_t> sizes;
};

SubtreeCounts subtree_counts(const RootedTree& tree) {
  SubtreeCounts c{std::vector<std::uint32_t>(tree.size(), 0), std::vector<std::uint32_t>(tree.size(), 1)};
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const node_id v = *it;
    if (tree.is_leaf(v)) c.leaves[v] = 1;
    const node_id p = tree.parent(v);
    if (p != no_node) {
      c.leaves[p] += c.leaves[v];
      c.sizes[p] += c.sizes[v];
    }
  }
  return c;
}

bool meets(const LevelCaps& caps, const SubtreeCounts& c, std::span<const weight_t> w, node_id v) {
  return c.leaves[v] <= caps.leaves && c.sizes[v] <= caps.nodes && (w.empty() || w[v] <= caps.weight);
}

// Assigns micro-tree ids in preorder and buckets the nodes.
void group_micro_trees(const RootedTree& tree, ArtDecomposition& d) {
  const std::size_t n = tree.size();
  d.micro_of.assign(n, no_node);
  for (node_id v : tree.preorder()) {
    if (d.level[v] == ArtLevel::top) continue;
    const node_id p = tree.parent(v);
    if (p == no_node || d.level[p] != d.level[v]) {
      d.micro_of[v] = static_cast<std::uint32_t>(d.micro_level.size());
      d.micro_level.push_back(d.level[v]);
    } else {
      d.micro_of[v] = d.micro_of[p];
    }
  }
  d.offsets.assign(d.micro_level.size() + 1, 0);
  for (node_id v = 0; v < n; ++v) {
    if (d.micro_of[v] != no_node) ++d.offsets[d.micro_of[v] + 1];
  }
  for (std::size_t m = 0; m < d.micro_level.size(); ++m) d.offsets[m + 1] += d.offsets[m];
  d.nodes.resize(d.offsets.back());
  std::vector<std::uint32_t> fill(d.offsets.begin(), d.offsets.end() - 1);
  for (node_id v : tree.preorder()) {
    if (d.micro_of[v] != no_node) d.nodes[fill[d.micro_of[v]]++] = v;
  }
}

}  // namespace

std::size_t ArtDecomposition::top_leaf_count(const RootedTree& tree) const {
  std::size_t count = 0;
  for (node_id v = 0; v < tree.size(); ++v) {
    if (level[v] != ArtLevel::top) continue;
    bool leaf = true;
    for (node_id c : tree.children(v)) leaf = leaf && level[c] != ArtLevel::top;
    count += leaf;
  }
  return count;
}

ArtDecomposition art_decompose(const RootedTree& tree, std::uint32_t chi) {
  if (chi == 0) throw std::invalid_argument("chi must be positive");
  LevelCaps caps;
  caps.leaves = chi;
  return art_decompose_two_level(tree, {}, caps, caps);
}

ArtDecomposition art_decompose_two_level(const RootedTree& tree, std::span<const weight_t> weights,
                                         const LevelCaps& middle, const LevelCaps& bottom) {
  if (bottom.leaves > middle.leaves || bottom.nodes > middle.nodes || bottom.weight > middle.weight) {
    throw std::invalid_argument("bottom caps must not exceed middle caps");
  }
  const auto counts = subtree_counts(tree);
  ArtDecomposition d;
  d.level.resize(tree.size());
  for (node_id v = 0; v < tree.size(); ++v) {
    if (meets(bottom, counts, weights, v)) {
      d.level[v] = ArtLevel::bottom;
    } else if (meets(middle, counts, weights, v)) {
      d.level[v] = ArtLevel::middle;
    } else {
      d.level[v] = ArtLevel::top;
    }
  }
  group_micro_trees(tree, d);
  return d;
}

}  // namespace swa
