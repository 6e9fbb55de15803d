#include "swa/small_predecessor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swa {
namespace small_search {

namespace {
constexpr std::size_t kScanLimit = 32;
}

std::size_t count_le(std::span<const std::uint32_t> keys, std::uint64_t q) noexcept {
  if (keys.size() <= kScanLimit) {
    std::size_t c = 0;
    for (std::uint32_t k : keys) c += static_cast<std::size_t>(k <= q);
    return c;
  }
  std::size_t lo = 0;
  std::size_t len = keys.size();
  while (len > 1) {
    const std::size_t half = len / 2;
    lo = keys[lo + half - 1] <= q ? lo + half : lo;
    len -= half;
  }
  return lo + static_cast<std::size_t>(keys[lo] <= q);
}

std::size_t count_lt(std::span<const std::uint32_t> keys, std::uint64_t q) noexcept {
  if (q == 0) return 0;
  return count_le(keys, q - 1);
}

void normalize(std::vector<SmallEntry>& entries, std::size_t cap) {
  for (const auto& e : entries) {
    if (e.key == 0) throw std::invalid_argument("small predecessor keys must be positive");
  }
  std::sort(entries.begin(), entries.end(), [](const SmallEntry& a, const SmallEntry& b) {
    return a.key != b.key ? a.key < b.key : a.depth > b.depth;
  });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const SmallEntry& a, const SmallEntry& b) { return a.key == b.key; }),
                entries.end());
  if (entries.size() > cap) {
    throw std::invalid_argument("small predecessor set of size " + std::to_string(entries.size()) +
                                " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace small_search

SmallPredecessorSet::SmallPredecessorSet(std::vector<SmallEntry> entries, std::size_t cap) {
  small_search::normalize(entries, cap);
  keys_.reserve(entries.size());
  payloads_.reserve(entries.size());
  for (const auto& e : entries) {
    keys_.push_back(e.key);
    payloads_.push_back(e.payload);
  }
}

std::optional<PredecessorHit> SmallPredecessorSet::predecessor(std::uint64_t q) const noexcept {
  const std::size_t c = small_search::count_le(keys_, q);
  if (c == 0) return std::nullopt;
  return PredecessorHit{keys_[c - 1], payloads_[c - 1]};
}

std::optional<PredecessorHit> SmallPredecessorSet::successor(std::uint64_t q) const noexcept {
  const std::size_t c = small_search::count_lt(keys_, q);
  if (c == keys_.size()) return std::nullopt;
  return PredecessorHit{keys_[c], payloads_[c]};
}

std::uint32_t SmallPredecessorForest::add(std::vector<SmallEntry> entries, std::size_t cap) {
  small_search::normalize(entries, cap);
  for (const auto& e : entries) {
    keys_.push_back(e.key);
    payloads_.push_back(e.payload);
  }
  offsets_.push_back(static_cast<std::uint32_t>(keys_.size()));
  return static_cast<std::uint32_t>(offsets_.size() - 2);
}

std::optional<PredecessorHit> SmallPredecessorForest::predecessor(std::uint32_t set,
                                                                   std::uint64_t q) const noexcept {
  const auto keys = keys_of(set);
  const std::size_t c = small_search::count_le(keys, q);
  if (c == 0) return std::nullopt;
  const std::size_t at = offsets_[set] + c - 1;
  return PredecessorHit{keys_[at], payloads_[at]};
}

std::optional<PredecessorHit> SmallPredecessorForest::successor(std::uint32_t set,
                                                                 std::uint64_t q) const noexcept {
  const auto keys = keys_of(set);
  const std::size_t c = small_search::count_lt(keys, q);
  if (c == keys.size()) return std::nullopt;
  const std::size_t at = offsets_[set] + c;
  return PredecessorHit{keys_[at], payloads_[at]};
}

void SmallPredecessorForest::shrink_to_fit() {
  keys_.shrink_to_fit();
  payloads_.shrink_to_fit();
  offsets_.shrink_to_fit();
}

}  // namespace swa
