#include "swa/swa_linear.hpp"

#include <cmath>
#include <string>

#include "swa/contracted_tree.hpp"

namespace swa {

std::uint32_t chi_for(std::size_t n, double epsilon) {
  if (!(epsilon > 0)) throw config_error("epsilon must be positive");
  if (n <= 2) return 1;
  const double lg = std::log2(static_cast<double>(n));
  const double v = std::floor(epsilon * lg / std::log2(lg));
  return v < 1 ? 1 : static_cast<std::uint32_t>(std::min(v, 1e6));
}

SwaIndexLinear::SwaIndexLinear(RootedTree tree, std::vector<weight_t> weights, LinearOptions options)
    : core_(std::move(tree), std::move(weights)) {
  const auto& t = core_.tree();
  const auto& hpd = core_.hpd();
  const std::size_t n = t.size();
  const std::uint32_t chi = chi_for(n, options.epsilon);
  const std::uint64_t chi2 = std::uint64_t{chi} * chi;
  if (2 * chi2 > 255) {
    throw config_error("epsilon " + std::to_string(options.epsilon) + " gives chi=" + std::to_string(chi) +
                       ", micro-trees would exceed 255 nodes");
  }
  layout_.chi = chi;
  layout_.bottom_caps = {chi, 2 * chi, 2 * chi};
  layout_.middle_caps = {static_cast<std::uint32_t>(chi2), static_cast<std::uint32_t>(2 * chi2),
                         static_cast<weight_t>(2 * chi2)};

  const auto contracted = contract_tree(t, hpd, core_.weights());
  const auto& ct = contracted.tree;
  const std::size_t paths = ct.size();
  layout_.contracted_nodes = paths;
  c_parent_.assign(ct.parents().begin(), ct.parents().end());
  c_weight_ = contracted.weights;

  const auto art = art_decompose_two_level(ct, c_weight_, layout_.middle_caps, layout_.bottom_caps);
  level_.resize(paths);
  slot_.assign(paths, 0);
  local_.assign(paths, 0);
  for (path_id p = 0; p < paths; ++p) level_[p] = static_cast<std::uint8_t>(art.level[p]);

  bottom_table_ = MicroTable({layout_.bottom_caps.nodes, layout_.bottom_caps.weight});
  middle_table_ = MicroTable({layout_.middle_caps.nodes, layout_.middle_caps.weight});
  micro_shape_.resize(art.micro_count());
  micro_offset_.resize(art.micro_count() + 1);
  micro_nodes_.resize(art.nodes.size());
  MicroTree micro;
  std::vector<std::uint32_t> local_of;
  for (std::uint32_t m = 0; m < art.micro_count(); ++m) {
    const auto nodes = art.micro_nodes(m);
    const bool bottom = art.micro_level[m] == ArtLevel::bottom;
    bottom ? ++layout_.bottom_trees : ++layout_.middle_trees;
    auto& table = bottom ? bottom_table_ : middle_table_;
    micro.parent.resize(nodes.size());
    micro.weight.resize(nodes.size());
    for (std::uint32_t i = 0; i < nodes.size(); ++i) slot_[nodes[i]] = i;  // preorder index for now
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
      micro.parent[i] = i == 0 ? no_node : slot_[c_parent_[nodes[i]]];
      micro.weight[i] = c_weight_[nodes[i]];
    }
    const auto canon = canonicalize(micro, table.caps());
    micro_shape_[m] = table.intern(canon, micro);
    micro_offset_[m] = art.offsets[m];
    for (std::uint32_t c = 0; c < nodes.size(); ++c) {
      const path_id p = nodes[canon.order[c]];
      micro_nodes_[art.offsets[m] + c] = p;
      local_[p] = static_cast<std::uint8_t>(c);
      slot_[p] = m;
    }
  }
  micro_offset_[art.micro_count()] = static_cast<std::uint32_t>(art.nodes.size());
  bottom_table_.seal();
  middle_table_.seal();
  layout_.bottom_shapes = bottom_table_.shape_count();
  layout_.middle_shapes = middle_table_.shape_count();

  // Top tree: one predecessor set per top leaf over its C-ancestors; every
  // other top node borrows the set of a top leaf below it.
  const auto order = ct.preorder();
  std::vector<SmallEntry> entries;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const path_id p = *it;
    if (art.level[p] != ArtLevel::top) continue;
    ++layout_.top_nodes;
    path_id below = no_node;
    for (path_id c : ct.children(p)) {
      if (art.level[c] == ArtLevel::top) {
        below = c;
        break;
      }
    }
    if (below != no_node) {
      slot_[p] = slot_[below];
      continue;
    }
    ++layout_.top_leaves;
    entries.clear();
    for (path_id q = p; q != no_node; q = c_parent_[q]) entries.push_back({c_weight_[q], q, ct.depth(q)});
    slot_[p] = top_sets_.add(entries);
  }
  top_sets_.shrink_to_fit();

  layout_.table_bits = bottom_table_.table_bits() + middle_table_.table_bits();
  layout_.table_budget_bits =
      options.table_budget_bits ? options.table_budget_bits : std::max<std::size_t>(n, std::size_t{1} << 16);
  if (layout_.table_bits > layout_.table_budget_bits) {
    throw config_error("micro-tree table needs " + std::to_string(layout_.table_bits) +
                       " bits, budget is " + std::to_string(layout_.table_budget_bits) +
                       "; lower epsilon");
  }
  if (options.eager_table) {
    bottom_table_.fill_all();
    middle_table_.fill_all();
  }
}

path_id SwaIndexLinear::resolve(path_id x, weight_t k, QueryStats* stats) const {
  if (c_weight_[x] >= k) return x;
  if (level_[x] == static_cast<std::uint8_t>(ArtLevel::bottom)) {
    const std::uint32_t m = slot_[x];
    const path_id root = micro_nodes_[micro_offset_[m]];
    if (k <= c_weight_[root]) {
      if (stats) ++stats->table_probes;
      return micro_nodes_[micro_offset_[m] + bottom_table_.lookup(micro_shape_[m], local_[x], k)];
    }
    x = c_parent_[root];
    if (c_weight_[x] >= k) return x;
  }
  if (level_[x] == static_cast<std::uint8_t>(ArtLevel::middle)) {
    const std::uint32_t m = slot_[x];
    const path_id root = micro_nodes_[micro_offset_[m]];
    if (k <= c_weight_[root]) {
      if (stats) ++stats->table_probes;
      return micro_nodes_[micro_offset_[m] + middle_table_.lookup(micro_shape_[m], local_[x], k)];
    }
    x = c_parent_[root];
    if (c_weight_[x] >= k) return x;
  }
  if (stats) ++stats->table_probes;
  return top_sets_.successor(slot_[x], k)->payload;
}

std::optional<node_id> SwaIndexLinear::query(node_id u, weight_t k, QueryStats* stats) const {
  core_.check_query(u, k);
  const auto w = core_.weights();
  if (w[u] >= k) return u;
  if (k > w[core_.tree().root()]) return std::nullopt;
  const path_id target = resolve(core_.hpd().path_of(u), k, stats);
  return core_.finish(u, target, k, stats);
}

SpaceReport SwaIndexLinear::space() const noexcept {
  SpaceReport r;
  core_.add_space(r);
  r.predecessor_bytes = top_sets_.space_bytes();
  r.table_bytes = (bottom_table_.table_bits() + middle_table_.table_bits()) / 8;
  r.other_bytes = c_parent_.capacity() * 4 + c_weight_.capacity() * 4 + level_.capacity() +
                  slot_.capacity() * 4 + local_.capacity() + micro_shape_.capacity() * 4 +
                  micro_offset_.capacity() * 4 + micro_nodes_.capacity() * 4;
  return r;
}

}  // namespace swa
