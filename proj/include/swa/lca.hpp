#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swa/rooted_tree.hpp"

namespace swa {

// Range-minimum over a fixed array of depths, O(1) query in O(n) words:
// a sparse table over 64-entry block minima plus, for every position, a
// 64-bit mask of the in-block "minimum stack" ending there.
class BlockRmq {
 public:
  BlockRmq() = default;
  explicit BlockRmq(std::vector<std::uint32_t> values);

  // Position of a minimum value in [l, r] (0-based, inclusive).
  std::size_t argmin(std::size_t l, std::size_t r) const noexcept;
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t space_bytes() const noexcept;

 private:
  std::size_t in_block(std::size_t l, std::size_t r) const noexcept;
  std::size_t better(std::size_t a, std::size_t b) const noexcept {
    return values_[b] < values_[a] ? b : a;
  }

  std::vector<std::uint32_t> values_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint32_t> table_;  // level-major, argmin over 2^level blocks
  std::size_t blocks_ = 0;
};

// Lowest common ancestor via Euler tour + range minimum over tour depths.
class LcaStructure {
 public:
  LcaStructure() = default;
  explicit LcaStructure(const RootedTree& tree);

  // Throws std::out_of_range for node ids outside the tree.
  node_id lca(node_id u, node_id v) const;
  node_id lca_unchecked(node_id u, node_id v) const noexcept;

  std::size_t space_bytes() const noexcept;

 private:
  std::vector<node_id> tour_;
  std::vector<std::uint32_t> first_;
  BlockRmq rmq_;
};

}  // namespace swa
