#pragma once

#include <optional>
#include <vector>

#include "swa/art_decomposition.hpp"
#include "swa/micro_tree.hpp"
#include "swa/swa_log.hpp"

namespace swa {

struct LinearOptions {
  double epsilon = 1.0;
  bool eager_table = false;
  // 0 selects the default budget, max(n, 2^16) bits.
  std::size_t table_budget_bits = 0;
};

// chi = max(1, floor(eps * log2 n / log2 log2 n)); 1 for n <= 2.
std::uint32_t chi_for(std::size_t n, double epsilon);

// What the build decided and produced, for reports and tests.
struct LinearLayout {
  std::uint32_t chi = 1;
  LevelCaps middle_caps;
  LevelCaps bottom_caps;
  std::size_t contracted_nodes = 0;
  std::size_t top_nodes = 0;
  std::size_t top_leaves = 0;
  std::size_t middle_trees = 0;
  std::size_t bottom_trees = 0;
  std::size_t middle_shapes = 0;
  std::size_t bottom_shapes = 0;
  std::size_t table_bits = 0;
  std::size_t table_budget_bits = 0;
};

// SWA index with O(n) words. The heavy paths of T are contracted into a
// tree C; C is split into bottom trees, middle trees and a top tree. Micro
// trees answer from shared tables indexed by their canonical shape, and
// each top-tree leaf keeps a small predecessor set over its ancestors in C.
// A query finds the heavy path holding the answer with at most three
// lookups, then finishes like the O(n log n) index.
class SwaIndexLinear {
 public:
  SwaIndexLinear() = default;
  // Throws weight_error on invalid weights and config_error when epsilon is
  // not positive, the caps get too large, or the table exceeds its budget.
  SwaIndexLinear(RootedTree tree, std::vector<weight_t> weights, LinearOptions options = {});

  std::optional<node_id> query(node_id u, weight_t k, QueryStats* stats = nullptr) const;

  const HeavyPathCore& core() const noexcept { return core_; }
  const RootedTree& tree() const noexcept { return core_.tree(); }
  std::span<const weight_t> weights() const noexcept { return core_.weights(); }
  const LinearLayout& layout() const noexcept { return layout_; }
  ArtLevel level_of_path(path_id p) const noexcept { return static_cast<ArtLevel>(level_[p]); }
  std::size_t filled_shapes() const noexcept {
    return bottom_table_.filled_shapes() + middle_table_.filled_shapes();
  }
  SpaceReport space() const noexcept;

 private:
  // Heavy path of the lowest C-ancestor-or-self of x with weight >= k.
  path_id resolve(path_id x, weight_t k, QueryStats* stats) const;

  HeavyPathCore core_;
  std::vector<path_id> c_parent_;
  std::vector<weight_t> c_weight_;
  std::vector<std::uint8_t> level_;
  std::vector<std::uint32_t> slot_;   // micro-tree id, or top set id
  std::vector<std::uint8_t> local_;   // canonical index inside the micro-tree
  std::vector<std::uint32_t> micro_shape_;
  std::vector<std::uint32_t> micro_offset_;
  std::vector<path_id> micro_nodes_;  // per micro-tree, in canonical order
  MicroTable bottom_table_;
  MicroTable middle_table_;
  SmallPredecessorForest top_sets_;
  LinearLayout layout_;
};

}  // namespace swa
