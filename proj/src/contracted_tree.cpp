#include "swa/contracted_tree.hpp"

namespace swa {

ContractedTree contract_tree(const RootedTree& tree, const HeavyPathDecomposition& hpd,
                             std::span<const weight_t> weights) {
  const std::size_t paths = hpd.path_count();
  std::vector<node_id> parent(paths, no_node);
  std::vector<weight_t> w(paths);
  for (path_id p = 0; p < paths; ++p) {
    const node_id top = hpd.top(p);
    w[p] = weights[top];
    if (tree.parent(top) != no_node) parent[p] = hpd.path_of(tree.parent(top));
  }
  return {RootedTree::from_parents(std::move(parent)), std::move(w)};
}

}  // namespace swa
