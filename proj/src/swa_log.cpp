#include "swa/swa_log.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swa {

HeavyPathCore::HeavyPathCore(RootedTree tree, std::vector<weight_t> weights)
    : tree_(std::move(tree)), weights_(std::move(weights)) {
  require_valid_weights(tree_, weights_);
  hpd_ = HeavyPathDecomposition(tree_);
  encodings_ = PathEncodingSet(hpd_, weights_);
  lca_ = LcaStructure(tree_);
}

node_id HeavyPathCore::finish(node_id u, path_id target, weight_t k,
                              QueryStats* stats) const noexcept {
  const std::uint32_t lowest = encodings_.lowest_with_weight(target, k);
  if (stats) {
    ++stats->selects;
    ++stats->ranks;
  }
  if (hpd_.path_of(u) == target) return hpd_.node_at(target, lowest);
  // u hangs off the target path below the point where its root path joins it.
  const node_id joint = lca_.lca_unchecked(hpd_.bottom(target), u);
  if (stats) ++stats->lcas;
  return hpd_.node_at(target, std::max(lowest, hpd_.position(joint)));
}

void HeavyPathCore::check_query(node_id u, weight_t k) const {
  if (u >= tree_.size()) {
    throw std::out_of_range("node " + std::to_string(u + 1) + " is not in the tree");
  }
  if (k == 0) throw std::invalid_argument("threshold k must be positive");
}

void HeavyPathCore::add_space(SpaceReport& report) const noexcept {
  report.tree_bytes += tree_.space_bytes() + weights_.capacity() * sizeof(weight_t);
  report.path_bytes += hpd_.space_bytes();
  report.encoding_bytes += encodings_.space_bytes();
  report.lca_bytes += lca_.space_bytes();
}

SwaIndexLog::SwaIndexLog(RootedTree tree, std::vector<weight_t> weights)
    : core_(std::move(tree), std::move(weights)) {
  const auto& t = core_.tree();
  const auto& hpd = core_.hpd();
  const auto w = core_.weights();
  std::vector<SmallEntry> entries;
  for (path_id p = 0; p < hpd.path_count(); ++p) {
    entries.clear();
    for (path_id q = p;;) {
      const node_id top = hpd.top(q);
      entries.push_back(SmallEntry{w[top], q, t.depth(top)});
      const node_id up = t.parent(top);
      if (up == no_node) break;
      q = hpd.path_of(up);
    }
    sets_.add(entries);
  }
  sets_.shrink_to_fit();
}

std::optional<node_id> SwaIndexLog::query(node_id u, weight_t k, QueryStats* stats) const {
  core_.check_query(u, k);
  const auto w = core_.weights();
  if (w[u] >= k) return u;
  if (k > w[core_.tree().root()]) return std::nullopt;
  // The leaf at the bottom of u's heavy path is a leaf descendant of u.
  const auto hit = sets_.successor(core_.hpd().path_of(u), k);
  if (stats) ++stats->table_probes;
  return core_.finish(u, hit->payload, k, stats);
}

std::size_t SwaIndexLog::max_leaf_set_size() const noexcept {
  std::size_t best = 0;
  for (path_id p = 0; p < sets_.set_count(); ++p) best = std::max(best, sets_.set_size(p));
  return best;
}

SpaceReport SwaIndexLog::space() const noexcept {
  SpaceReport r;
  core_.add_space(r);
  r.predecessor_bytes = sets_.space_bytes();
  return r;
}

}  // namespace swa
