#pragma once

#include <sstream>
#include <string>

#include "swa/tree_io.hpp"

namespace swa::testing {

// A 16-node tree weighted by subtree size whose root heavy path is
// u1..u6 (ids 1..6) with weights 1,2,5,6,9,16. Internal id = file id - 1.
inline const char* kGoldenTree =
    "16\n1 2 1\n2 3 2\n3 4 5\n4 5 6\n5 6 9\n6 0 16\n7 3 1\n8 3 1\n"
    "9 5 2\n10 9 1\n11 6 6\n12 11 2\n13 11 2\n14 12 1\n15 13 1\n16 11 1\n";

inline WeightedTree golden_tree() {
  std::istringstream in(kGoldenTree);
  return read_weighted_tree(in);
}

inline constexpr const char* kGoldenEncoding = "1010111010111011111110";

}  // namespace swa::testing
