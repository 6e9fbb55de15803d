#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swa/rooted_tree.hpp"

namespace swa {

struct WeightedTree {
  RootedTree tree;
  std::vector<weight_t> weights;
  std::vector<std::size_t> line_of_node;  // source line per internal node (reader only)
};

// Malformed text input; line() is 1-based (0 when no single line is at fault).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Tree text format: line 1 holds n, then n lines "node_id parent_id weight"
// with 1-based ids and parent_id 0 for the root. Blank lines are ignored.
// Structural problems are reported against the line that introduced them.
// Weights are parsed but not validated here.
WeightedTree read_weighted_tree(std::istream& in);

void write_weighted_tree(std::ostream& out, const RootedTree& tree,
                         std::span<const weight_t> weights);

}  // namespace swa
