#pragma once

#include <vector>

#include "swa/heavy_path.hpp"
#include "swa/rooted_tree.hpp"

namespace swa {

// One node per heavy path of T. Node p is heavy path p; its parent is the
// heavy path holding the parent of p's top node, and its weight is the
// weight of p's top node. The root is path 0.
struct ContractedTree {
  RootedTree tree;
  std::vector<weight_t> weights;
};

ContractedTree contract_tree(const RootedTree& tree, const HeavyPathDecomposition& hpd,
                             std::span<const weight_t> weights);

}  // namespace swa
