#include "swa/lca.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace swa {

BlockRmq::BlockRmq(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  masks_.assign(n, 0);
  blocks_ = (n + 63) / 64;

  std::vector<std::uint32_t> block_min(blocks_);
  for (std::size_t b = 0; b < blocks_; ++b) {
    const std::size_t start = b * 64;
    const std::size_t end = std::min(n, start + 64);
    std::uint64_t stack = 0;
    for (std::size_t j = start; j < end; ++j) {
      const unsigned bit = static_cast<unsigned>(j - start);
      // Pop entries whose value is >= values_[j]; they can no longer be a
      // strict minimum of any range ending at or after j.
      while (stack != 0) {
        const unsigned top = 63 - static_cast<unsigned>(std::countl_zero(stack));
        if (values_[start + top] < values_[j]) break;
        stack &= ~(std::uint64_t{1} << top);
      }
      stack |= std::uint64_t{1} << bit;
      masks_[j] = stack;
    }
    block_min[b] = static_cast<std::uint32_t>(start + std::countr_zero(masks_[end - 1]));
  }

  const std::size_t levels = blocks_ == 0 ? 0 : std::bit_width(blocks_);
  table_.resize(levels * blocks_);
  for (std::size_t b = 0; b < blocks_; ++b) table_[b] = block_min[b];
  for (std::size_t lv = 1; lv < levels; ++lv) {
    const std::size_t half = std::size_t{1} << (lv - 1);
    for (std::size_t b = 0; b + (std::size_t{1} << lv) <= blocks_; ++b) {
      table_[lv * blocks_ + b] = static_cast<std::uint32_t>(
          better(table_[(lv - 1) * blocks_ + b], table_[(lv - 1) * blocks_ + b + half]));
    }
  }
}

std::size_t BlockRmq::in_block(std::size_t l, std::size_t r) const noexcept {
  const std::size_t start = l & ~std::size_t{63};
  const std::uint64_t m = masks_[r] & (~std::uint64_t{0} << (l - start));
  return start + static_cast<std::size_t>(std::countr_zero(m));
}

std::size_t BlockRmq::argmin(std::size_t l, std::size_t r) const noexcept {
  const std::size_t bl = l / 64;
  const std::size_t br = r / 64;
  if (bl == br) return in_block(l, r);
  std::size_t best = better(in_block(l, bl * 64 + 63), in_block(br * 64, r));
  if (br > bl + 1) {
    const std::size_t lo = bl + 1;
    const std::size_t span = br - 1 - lo + 1;
    const std::size_t lv = std::bit_width(span) - 1;
    best = better(best, table_[lv * blocks_ + lo]);
    best = better(best, table_[lv * blocks_ + br - (std::size_t{1} << lv)]);
  }
  return best;
}

std::size_t BlockRmq::space_bytes() const noexcept {
  return values_.capacity() * 4 + masks_.capacity() * 8 + table_.capacity() * 4;
}

LcaStructure::LcaStructure(const RootedTree& tree) {
  const std::size_t n = tree.size();
  tour_.reserve(2 * n - 1);
  first_.assign(n, 0);
  std::vector<std::uint32_t> depths;
  depths.reserve(2 * n - 1);

  // Iterative Euler tour: (node, index of next child to visit).
  std::vector<std::pair<node_id, std::uint32_t>> stack{{tree.root(), 0}};
  first_[tree.root()] = 0;
  tour_.push_back(tree.root());
  depths.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = tree.children(v);
    if (next < kids.size()) {
      const node_id c = kids[next++];
      first_[c] = static_cast<std::uint32_t>(tour_.size());
      tour_.push_back(c);
      depths.push_back(tree.depth(c));
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        tour_.push_back(stack.back().first);
        depths.push_back(tree.depth(stack.back().first));
      }
    }
  }
  rmq_ = BlockRmq(std::move(depths));
}

node_id LcaStructure::lca_unchecked(node_id u, node_id v) const noexcept {
  std::size_t a = first_[u];
  std::size_t b = first_[v];
  if (a > b) std::swap(a, b);
  return tour_[rmq_.argmin(a, b)];
}

node_id LcaStructure::lca(node_id u, node_id v) const {
  if (u >= first_.size() || v >= first_.size()) throw std::out_of_range("unknown node id in lca query");
  return lca_unchecked(u, v);
}

std::size_t LcaStructure::space_bytes() const noexcept {
  return tour_.capacity() * 4 + first_.capacity() * 4 + rmq_.space_bytes();
}

}  // namespace swa
