#include "swa/micro_tree.hpp"

#include <algorithm>
#include <bit>

namespace swa {
namespace {

void append_field(std::string& out, std::uint64_t value, unsigned width) {
  for (unsigned b = width; b-- > 0;) out.push_back((value >> b & 1) ? '1' : '0');
}

unsigned width_for(std::uint64_t max_value) {
  return std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));
}

}  // namespace

CanonicalMicroTree canonicalize(const MicroTree& tree, const MicroCaps& caps) {
  const std::size_t s = tree.size();
  if (s == 0 || tree.weight.size() != s) throw encoding_error("micro-tree is empty or malformed");
  if (s > caps.nodes) {
    throw encoding_error("micro-tree has " + std::to_string(s) + " nodes, cap is " +
                         std::to_string(caps.nodes));
  }
  if (tree.parent[0] != no_node) throw encoding_error("micro-tree root must be node 0");
  for (std::size_t v = 0; v < s; ++v) {
    if (v > 0 && tree.parent[v] >= v) throw encoding_error("micro-tree parent ids must precede children");
    if (tree.weight[v] == 0 || tree.weight[v] > caps.weight) {
      throw encoding_error("micro-tree weight " + std::to_string(tree.weight[v]) +
                           " outside [1," + std::to_string(caps.weight) + "]");
    }
  }
  const unsigned ww = width_for(caps.weight);

  // Subtree strings: '1', weight, sorted child strings, '0'.
  std::vector<std::vector<std::uint32_t>> children(s);
  for (std::size_t v = 1; v < s; ++v) children[tree.parent[v]].push_back(static_cast<std::uint32_t>(v));
  std::vector<std::string> code(s);
  for (std::size_t v = s; v-- > 0;) {
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end(), [&](std::uint32_t a, std::uint32_t b) {
      return code[a] < code[b];
    });
    std::string c = "1";
    append_field(c, tree.weight[v], ww);
    for (auto k : kids) c += code[k];
    c.push_back('0');
    code[v] = std::move(c);
  }

  CanonicalMicroTree out;
  out.rank.resize(s);
  std::string parens;
  // Preorder over sorted children; parentheses emitted alongside.
  std::vector<std::pair<std::uint32_t, std::size_t>> frames{{0, 0}};
  out.order.push_back(0);
  parens.push_back('1');
  while (!frames.empty()) {
    auto& [v, next] = frames.back();
    if (next < children[v].size()) {
      const std::uint32_t c = children[v][next++];
      out.order.push_back(c);
      parens.push_back('1');
      frames.push_back({c, 0});
    } else {
      parens.push_back('0');
      frames.pop_back();
    }
  }
  for (std::uint32_t i = 0; i < s; ++i) out.rank[out.order[i]] = i;
  out.bits = std::move(parens);
  for (auto v : out.order) append_field(out.bits, tree.weight[v], ww);
  return out;
}

std::string encode_micro_tree(const MicroTree& tree, std::uint32_t u, weight_t k, const MicroCaps& caps) {
  auto canon = canonicalize(tree, caps);
  if (u >= tree.size()) throw encoding_error("query node outside the micro-tree");
  if (k == 0 || k > caps.weight) throw encoding_error("threshold outside [1, weight cap]");
  append_field(canon.bits, canon.rank[u], width_for(caps.nodes - 1));
  append_field(canon.bits, k, width_for(caps.weight));
  return std::move(canon.bits);
}

std::uint32_t MicroTable::intern(const CanonicalMicroTree& canon, const MicroTree& tree) {
  const auto [it, inserted] = index_.try_emplace(canon.bits, static_cast<std::uint32_t>(shape_base_.size()));
  if (!inserted) return it->second;
  const std::uint32_t base = static_cast<std::uint32_t>(node_weight_.size());
  shape_base_.push_back(base);
  const weight_t root_weight = tree.weight[0];
  for (std::uint32_t c = 0; c < canon.order.size(); ++c) {
    const std::uint32_t v = canon.order[c];
    node_parent_.push_back(c == 0 ? 0xff : static_cast<std::uint8_t>(canon.rank[tree.parent[v]]));
    node_weight_.push_back(static_cast<std::uint16_t>(tree.weight[v]));
    row_start_.push_back(0);
    // Row width is filled in at seal(); keep it in row_start_ for now.
    row_start_.back() = root_weight - tree.weight[v];
  }
  return it->second;
}

void MicroTable::seal() {
  index_ = {};
  std::uint64_t total = 0;
  for (auto& r : row_start_) {
    const std::uint32_t width = r;
    r = static_cast<std::uint32_t>(total);
    total += width;
  }
  answers_.assign(total, 0xff);
  state_ = std::make_unique<std::atomic<std::uint8_t>[]>(shape_base_.size());
  for (std::size_t s = 0; s < shape_base_.size(); ++s) state_[s].store(0, std::memory_order_relaxed);
}

void MicroTable::fill(std::uint32_t shape) const {
  std::lock_guard lock(*fill_mutex_);
  if (state_[shape].load(std::memory_order_relaxed) != 0) return;
  const std::uint32_t base = shape_base_[shape];
  const std::uint32_t end =
      shape + 1 < shape_base_.size() ? shape_base_[shape + 1] : static_cast<std::uint32_t>(node_weight_.size());
  const weight_t root_weight = node_weight_[base];
  for (std::uint32_t v = 0; v < end - base; ++v) {
    // Walk up; ancestor a answers every k in (weight of the previous node, weight(a)].
    weight_t covered = node_weight_[base + v];
    std::uint32_t a = v;
    while (covered < root_weight) {
      a = node_parent_[base + a];
      const weight_t wa = node_weight_[base + a];
      for (weight_t k = covered + 1; k <= wa; ++k) {
        answers_[row_start_[base + v] + (k - node_weight_[base + v] - 1)] = static_cast<std::uint8_t>(a);
      }
      covered = std::max(covered, wa);
    }
  }
  state_[shape].store(1, std::memory_order_release);
}

void MicroTable::fill_all() {
  for (std::uint32_t s = 0; s < shape_base_.size(); ++s) {
    if (state_[s].load(std::memory_order_acquire) == 0) fill(s);
  }
}

std::size_t MicroTable::filled_shapes() const noexcept {
  std::size_t c = 0;
  for (std::size_t s = 0; s < shape_base_.size(); ++s) c += state_[s].load(std::memory_order_relaxed) != 0;
  return c;
}

std::size_t MicroTable::table_bits() const noexcept {
  return answers_.size() * 8 + shape_base_.size() * 32 + node_parent_.size() * 8 +
         node_weight_.size() * 16 + row_start_.size() * 32 + shape_base_.size() * 8;
}

}  // namespace swa
