#include "swa/rooted_tree.hpp"

#include <algorithm>

namespace swa {

RootedTree RootedTree::from_parents(std::vector<node_id> parent) {
  const std::size_t n = parent.size();
  RootedTree t;
  if (n == 0) throw tree_error("tree has no nodes", no_node);
  if (n >= no_node) throw tree_error("tree too large", no_node);

  node_id root = no_node;
  for (node_id v = 0; v < n; ++v) {
    const node_id p = parent[v];
    if (p == no_node) {
      if (root != no_node) throw tree_error("multiple roots", v);
      root = v;
    } else if (p >= n) {
      throw tree_error("dangling parent", v);
    } else if (p == v) {
      throw tree_error("cycle through node", v);
    }
  }

  t.child_offsets_.assign(n + 1, 0);
  for (node_id v = 0; v < n; ++v) {
    if (parent[v] != no_node) ++t.child_offsets_[parent[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) t.child_offsets_[v + 1] += t.child_offsets_[v];
  t.child_list_.resize(t.child_offsets_[n]);
  {
    std::vector<std::uint32_t> fill(t.child_offsets_.begin(), t.child_offsets_.end() - 1);
    for (node_id v = 0; v < n; ++v) {
      if (parent[v] != no_node) t.child_list_[fill[parent[v]]++] = v;
    }
  }

  if (root == no_node) {
    // Every node has a parent, so following parents from node 0 cycles.
    throw tree_error("cycle through node", 0);
  }

  t.preorder_.reserve(n);
  t.depth_.assign(n, 0);
  std::vector<node_id> stack{root};
  while (!stack.empty()) {
    const node_id v = stack.back();
    stack.pop_back();
    t.preorder_.push_back(v);
    const auto kids = std::span<const node_id>(t.child_list_.data() + t.child_offsets_[v],
                                               t.child_offsets_[v + 1] - t.child_offsets_[v]);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      t.depth_[*it] = t.depth_[v] + 1;
      stack.push_back(*it);
    }
  }
  if (t.preorder_.size() != n) {
    std::vector<char> seen(n, 0);
    for (node_id v : t.preorder_) seen[v] = 1;
    node_id v = 0;
    while (seen[v]) ++v;
    // Unreachable nodes lead into a cycle; report a node on it.
    std::vector<char> on_walk(n, 0);
    while (!on_walk[v]) {
      on_walk[v] = 1;
      v = parent[v];
    }
    throw tree_error("cycle through node", v);
  }

  t.parent_ = std::move(parent);
  t.root_ = root;
  for (node_id v = 0; v < n; ++v) t.leaves_ += t.is_leaf(v) ? 1 : 0;
  return t;
}

std::size_t RootedTree::space_bytes() const noexcept {
  return (parent_.capacity() + child_offsets_.capacity() + child_list_.capacity() +
          preorder_.capacity() + depth_.capacity()) * 4;
}

RootedTree build_tree(std::span<const ParentLink> links) {
  const std::size_t n = links.size();
  std::vector<node_id> parent(n, no_node);
  std::vector<char> seen(n, 0);
  for (const auto& link : links) {
    if (link.node == 0 || link.node > n) {
      throw tree_error("node id " + std::to_string(link.node) + " outside [1," +
                           std::to_string(n) + "]",
                       link.node);
    }
    if (seen[link.node - 1]) {
      throw tree_error("duplicate node id " + std::to_string(link.node), link.node);
    }
    seen[link.node - 1] = 1;
    if (link.parent) {
      if (*link.parent == 0 || *link.parent > n) {
        throw tree_error("dangling parent " + std::to_string(*link.parent) + " of node " +
                             std::to_string(link.node),
                         link.node);
      }
      parent[link.node - 1] = *link.parent - 1;
    }
  }
  try {
    return RootedTree::from_parents(std::move(parent));
  } catch (const tree_error& e) {
    const node_id external = e.node() == no_node ? no_node : e.node() + 1;
    throw tree_error(std::string(e.what()) +
                         (external == no_node ? "" : " " + std::to_string(external)),
                     external);
  }
}

std::vector<std::uint32_t> compute_sizes(const RootedTree& tree) {
  std::vector<std::uint32_t> size(tree.size(), 1);
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const node_id p = tree.parent(*it);
    if (p != no_node) size[p] += size[*it];
  }
  return size;
}

std::string WeightViolation::describe() const {
  const std::string who = "node " + std::to_string(node + 1);
  switch (rule) {
    case WeightRule::positive:
      return who + ": weight must be at least 1";
    case WeightRule::size_bound:
      return who + ": weight exceeds subtree size";
    case WeightRule::max_heap:
      return who + ": weight exceeds parent weight (max-heap)";
  }
  return who;
}

std::optional<WeightViolation> validate_weights(const RootedTree& tree,
                                                std::span<const weight_t> weights) {
  if (weights.size() != tree.size()) {
    throw weight_error("weight count " + std::to_string(weights.size()) +
                       " does not match node count " + std::to_string(tree.size()));
  }
  const auto size = compute_sizes(tree);
  for (node_id v = 0; v < tree.size(); ++v) {
    if (weights[v] < 1) return WeightViolation{v, WeightRule::positive};
    if (weights[v] > size[v]) return WeightViolation{v, WeightRule::size_bound};
    const node_id p = tree.parent(v);
    if (p != no_node && weights[v] > weights[p]) return WeightViolation{v, WeightRule::max_heap};
  }
  return std::nullopt;
}

void require_valid_weights(const RootedTree& tree, std::span<const weight_t> weights) {
  if (auto violation = validate_weights(tree, weights)) {
    throw weight_error(violation->describe());
  }
}

}  // namespace swa
