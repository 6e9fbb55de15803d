#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace swa {

// Internal node ids are 0-based; the text formats and CLI use 1-based ids.
using node_id = std::uint32_t;
using weight_t = std::uint32_t;

inline constexpr node_id no_node = std::numeric_limits<node_id>::max();

// Malformed tree input (multiple roots, cycles, dangling parents, bad ids).
class tree_error : public std::runtime_error {
 public:
  tree_error(const std::string& what, node_id node)
      : std::runtime_error(what), node_(node) {}
  node_id node() const noexcept { return node_; }

 private:
  node_id node_;
};

// Weights that are not a size-constrained max-heap function.
class weight_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Build parameters that cannot be honoured (e.g. the tabulation budget).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A micro-tree exceeded the node or weight cap of its level.
class encoding_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swa
