#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "swa/types.hpp"

namespace swa {

// A small weighted tree with local ids 0..s-1; node 0 is the root and
// every parent id is smaller than its child's id.
struct MicroTree {
  std::vector<std::uint32_t> parent;  // parent[0] == no_node
  std::vector<weight_t> weight;
  std::size_t size() const noexcept { return parent.size(); }
};

struct MicroCaps {
  std::uint32_t nodes = 1;
  weight_t weight = 1;
};

// Canonical form: children ordered by their own encodings, so isomorphic
// weighted trees get equal bits. `order[c]` is the local id at canonical
// preorder position c and `rank` is its inverse.
struct CanonicalMicroTree {
  std::string bits;  // '0'/'1': balanced parentheses, then weights in canonical preorder
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> rank;
};

// Throws encoding_error if the tree breaks the caps (or is malformed).
CanonicalMicroTree canonicalize(const MicroTree& tree, const MicroCaps& caps);

// Canonical bits followed by fixed-width fields for the canonical index of
// u and for k. Throws encoding_error when u or k is outside the caps.
std::string encode_micro_tree(const MicroTree& tree, std::uint32_t u, weight_t k, const MicroCaps& caps);

// Answers to "lowest ancestor-or-self of v with weight >= k" for every
// distinct micro-tree shape of one level, shared by all micro-trees of that
// shape. Rows only cover weight(v) < k <= weight(root); everything else is
// decided by the caller without a lookup. Rows are filled on first use
// (lazy) or all at once; filling is guarded by a mutex and published per
// shape with a release store, so concurrent readers are safe.
class MicroTable {
 public:
  MicroTable() = default;
  explicit MicroTable(const MicroCaps& caps) : caps_(caps) {}

  // Returns the shape id of a canonical tree, adding it if new.
  std::uint32_t intern(const CanonicalMicroTree& canon, const MicroTree& tree);
  // Ends the build phase; frees the interning map and allocates the rows.
  void seal();
  void fill_all();

  // Canonical index of the answer. Requires weight(v) < k <= weight(root).
  std::uint8_t lookup(std::uint32_t shape, std::uint32_t v, weight_t k) const {
    if (state_[shape].load(std::memory_order_acquire) == 0) fill(shape);
    const std::uint32_t node = shape_base_[shape] + v;
    return answers_[row_start_[node] + (k - node_weight_[node] - 1)];
  }

  std::size_t shape_count() const noexcept { return shape_base_.size(); }
  std::size_t filled_shapes() const noexcept;
  const MicroCaps& caps() const noexcept { return caps_; }
  // Size of the table with every row present.
  std::size_t table_bits() const noexcept;

 private:
  void fill(std::uint32_t shape) const;

  MicroCaps caps_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> shape_base_;
  std::vector<std::uint8_t> node_parent_;   // canonical parent id, 255 for the root
  std::vector<std::uint16_t> node_weight_;
  std::vector<std::uint32_t> row_start_;
  mutable std::vector<std::uint8_t> answers_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> state_;
  std::unique_ptr<std::mutex> fill_mutex_ = std::make_unique<std::mutex>();
};

}  // namespace swa
