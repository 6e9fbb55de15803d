#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swa/heavy_path.hpp"
#include "swa/lca.hpp"
#include "swa/path_encoding.hpp"
#include "swa/rooted_tree.hpp"
#include "swa/small_predecessor.hpp"

namespace swa {

// Per-query operation counters, filled in when a query is given a pointer.
struct QueryStats {
  std::uint64_t table_probes = 0;  // micro-table lookups and predecessor-set searches
  std::uint64_t ranks = 0;
  std::uint64_t selects = 0;
  std::uint64_t lcas = 0;

  QueryStats& operator+=(const QueryStats& o) {
    table_probes += o.table_probes;
    ranks += o.ranks;
    selects += o.selects;
    lcas += o.lcas;
    return *this;
  }
};

// Space of an index broken down by component, in bytes.
struct SpaceReport {
  std::size_t tree_bytes = 0;
  std::size_t path_bytes = 0;      // heavy-path decomposition
  std::size_t encoding_bytes = 0;  // concatenated B(H) strings with rank/select
  std::size_t lca_bytes = 0;
  std::size_t predecessor_bytes = 0;
  std::size_t table_bytes = 0;     // micro-tree tabulation (linear index only)
  std::size_t other_bytes = 0;

  std::size_t total_bytes() const noexcept {
    return tree_bytes + path_bytes + encoding_bytes + lca_bytes + predecessor_bytes +
           table_bytes + other_bytes;
  }
  double words_per_node(std::size_t n) const noexcept {
    return static_cast<double>(total_bytes()) / 8.0 / static_cast<double>(n);
  }
};

// Tree, weights, heavy paths, path encodings and LCA: the part both SWA
// indexes share. Given the heavy path holding the answer it finishes a query
// with one select, one rank and at most one LCA.
class HeavyPathCore {
 public:
  HeavyPathCore() = default;
  // Validates the weights; throws weight_error.
  HeavyPathCore(RootedTree tree, std::vector<weight_t> weights);

  const RootedTree& tree() const noexcept { return tree_; }
  std::span<const weight_t> weights() const noexcept { return weights_; }
  const HeavyPathDecomposition& hpd() const noexcept { return hpd_; }
  const PathEncodingSet& encodings() const noexcept { return encodings_; }
  const LcaStructure& lca() const noexcept { return lca_; }

  // Lowest ancestor of u with weight >= k, given that weight(u) < k and that
  // the answer lies on heavy path `target`.
  node_id finish(node_id u, path_id target, weight_t k, QueryStats* stats) const noexcept;

  // Checked entry: throws std::out_of_range / std::invalid_argument.
  void check_query(node_id u, weight_t k) const;

  void add_space(SpaceReport& report) const noexcept;

 private:
  RootedTree tree_;
  std::vector<weight_t> weights_;
  HeavyPathDecomposition hpd_;
  PathEncodingSet encodings_;
  LcaStructure lca_;
};

// SWA index with O(n log n) space: each leaf keeps a small predecessor set
// over the weights of the heavy-path top nodes on its root path.
class SwaIndexLog {
 public:
  SwaIndexLog() = default;
  SwaIndexLog(RootedTree tree, std::vector<weight_t> weights);

  // Lowest ancestor-or-self w of u with weight(w) >= k; nullopt when k
  // exceeds the root weight. Throws std::out_of_range for an unknown node
  // and std::invalid_argument for k == 0.
  std::optional<node_id> query(node_id u, weight_t k, QueryStats* stats = nullptr) const;

  const HeavyPathCore& core() const noexcept { return core_; }
  const RootedTree& tree() const noexcept { return core_.tree(); }
  std::span<const weight_t> weights() const noexcept { return core_.weights(); }

  std::size_t leaf_set_size(path_id p) const noexcept { return sets_.set_size(p); }
  std::size_t max_leaf_set_size() const noexcept;
  SpaceReport space() const noexcept;

 private:
  HeavyPathCore core_;
  // Set p belongs to the leaf at the bottom of heavy path p.
  SmallPredecessorForest sets_;
};

}  // namespace swa
