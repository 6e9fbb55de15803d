#include "swa/heavy_path.hpp"

#include <algorithm>

namespace swa {

HeavyPathDecomposition::HeavyPathDecomposition(const RootedTree& tree)
    : HeavyPathDecomposition(tree, compute_sizes(tree)) {}

HeavyPathDecomposition::HeavyPathDecomposition(const RootedTree& tree,
                                               std::span<const std::uint32_t> sizes) {
  const std::size_t n = tree.size();
  path_of_.assign(n, 0);
  position_.assign(n, 0);
  nodes_.reserve(n);

  std::vector<node_id> heavy(n, no_node);
  for (node_id v = 0; v < n; ++v) {
    for (node_id c : tree.children(v)) {
      if (heavy[v] == no_node || sizes[c] > sizes[heavy[v]]) heavy[v] = c;
    }
  }

  std::vector<node_id> run;
  for (node_id v : tree.preorder()) {
    const node_id p = tree.parent(v);
    if (p != no_node && heavy[p] == v) continue;
    // v tops a new path; walk heavy children down to a leaf.
    run.clear();
    for (node_id x = v; x != no_node; x = heavy[x]) run.push_back(x);
    const auto id = static_cast<path_id>(offsets_.size() - 1);
    std::uint32_t pos = 1;
    for (auto it = run.rbegin(); it != run.rend(); ++it, ++pos) {
      nodes_.push_back(*it);
      path_of_[*it] = id;
      position_[*it] = pos;
    }
    offsets_.push_back(static_cast<std::uint32_t>(nodes_.size()));
  }
}

std::vector<node_id> representative_leaf(const RootedTree& tree,
                                         const HeavyPathDecomposition& hpd) {
  std::vector<node_id> leaf(tree.size());
  for (node_id v = 0; v < tree.size(); ++v) leaf[v] = hpd.bottom(hpd.path_of(v));
  return leaf;
}

}  // namespace swa
