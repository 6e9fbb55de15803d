#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swa/rooted_tree.hpp"

namespace swa {

using path_id = std::uint32_t;

// Heavy-path decomposition. The heavy child of a node is the child with the
// largest subtree, ties broken by smallest node id, so every heavy path ends
// at a leaf. Path 0 contains the root; other paths are numbered in preorder
// of their top nodes. Nodes on a path are listed bottom-to-top and
// positions are 1-based from the bottom.
class HeavyPathDecomposition {
 public:
  HeavyPathDecomposition() = default;
  explicit HeavyPathDecomposition(const RootedTree& tree);
  HeavyPathDecomposition(const RootedTree& tree, std::span<const std::uint32_t> sizes);

  std::size_t path_count() const noexcept { return offsets_.size() - 1; }
  path_id path_of(node_id v) const noexcept { return path_of_[v]; }
  std::uint32_t position(node_id v) const noexcept { return position_[v]; }

  std::span<const node_id> path(path_id p) const noexcept {
    return {nodes_.data() + offsets_[p], offsets_[p + 1] - offsets_[p]};
  }
  std::uint32_t length(path_id p) const noexcept { return offsets_[p + 1] - offsets_[p]; }
  node_id bottom(path_id p) const noexcept { return nodes_[offsets_[p]]; }
  node_id top(path_id p) const noexcept { return nodes_[offsets_[p + 1] - 1]; }
  // Node at 1-based position `pos` (counted from the bottom) of path p.
  node_id node_at(path_id p, std::uint32_t pos) const noexcept {
    return nodes_[offsets_[p] + pos - 1];
  }

  std::size_t space_bytes() const noexcept {
    return (path_of_.capacity() + position_.capacity() + offsets_.capacity() +
            nodes_.capacity()) * 4;
  }

 private:
  std::vector<path_id> path_of_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<node_id> nodes_;
};

// For every node, the bottom node of its heavy path: a leaf descendant.
std::vector<node_id> representative_leaf(const RootedTree& tree,
                                         const HeavyPathDecomposition& hpd);

}  // namespace swa
