#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swa/types.hpp"

namespace swa {

// Static rooted tree over nodes 0..n-1. Children are kept in increasing id
// order in one contiguous array.
class RootedTree {
 public:
  RootedTree() = default;

  // parent[v] is v's parent, or no_node for the root. Throws tree_error on
  // zero or multiple roots, out-of-range parents, self loops and cycles.
  static RootedTree from_parents(std::vector<node_id> parent);

  std::size_t size() const noexcept { return parent_.size(); }
  node_id root() const noexcept { return root_; }
  node_id parent(node_id v) const noexcept { return parent_[v]; }
  std::span<const node_id> parents() const noexcept { return parent_; }
  std::span<const node_id> children(node_id v) const noexcept {
    return {child_list_.data() + child_offsets_[v], child_offsets_[v + 1] - child_offsets_[v]};
  }
  bool is_leaf(node_id v) const noexcept { return child_offsets_[v] == child_offsets_[v + 1]; }
  std::uint32_t depth(node_id v) const noexcept { return depth_[v]; }
  // Depth-first preorder; every parent precedes its children.
  std::span<const node_id> preorder() const noexcept { return preorder_; }
  std::size_t leaf_count() const noexcept { return leaves_; }

  bool contains(node_id v) const noexcept { return v < size(); }
  std::size_t space_bytes() const noexcept;

 private:
  std::vector<node_id> parent_;
  std::vector<std::uint32_t> child_offsets_;
  std::vector<node_id> child_list_;
  std::vector<node_id> preorder_;
  std::vector<std::uint32_t> depth_;
  node_id root_ = no_node;
  std::size_t leaves_ = 0;
};

// (node, parent) pair with 1-based ids as they appear in the tree text format.
struct ParentLink {
  std::uint32_t node;
  std::optional<std::uint32_t> parent;
};

// Builds a tree from 1-based links covering exactly the ids 1..n; node id k
// becomes internal node k-1. Errors name the offending (1-based) node.
RootedTree build_tree(std::span<const ParentLink> links);

// size(u) = number of nodes in the subtree rooted at u.
std::vector<std::uint32_t> compute_sizes(const RootedTree& tree);

enum class WeightRule {
  positive,   // weight(u) >= 1
  size_bound, // weight(u) <= size(u)
  max_heap,   // weight(u) <= weight(parent(u))
};

struct WeightViolation {
  node_id node;
  WeightRule rule;
  std::string describe() const;
};

// First node (by id) breaking a size-constrained max-heap rule, if any.
std::optional<WeightViolation> validate_weights(const RootedTree& tree,
                                                std::span<const weight_t> weights);

// Throws weight_error with the violation report.
void require_valid_weights(const RootedTree& tree, std::span<const weight_t> weights);

}  // namespace swa
