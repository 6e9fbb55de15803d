#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace swa {

// One candidate entry. `depth` only matters for duplicate keys: the deepest
// entry wins ("keep-deepest").
struct SmallEntry {
  std::uint32_t key = 0;
  std::uint32_t payload = 0;
  std::uint32_t depth = 0;
};

struct PredecessorHit {
  std::uint32_t key;
  std::uint32_t payload;
  friend bool operator==(const PredecessorHit&, const PredecessorHit&) = default;
};

namespace small_search {

// Number of keys <= q in a sorted key run. Short runs use a branch-free
// counting scan (the comparisons are independent, like a fusion node's
// parallel compare); longer runs a branch-light binary search.
std::size_t count_le(std::span<const std::uint32_t> keys, std::uint64_t q) noexcept;
std::size_t count_lt(std::span<const std::uint32_t> keys, std::uint64_t q) noexcept;

// Sorts by key, collapses duplicates keep-deepest. Throws
// std::invalid_argument on a zero key or when the result exceeds `cap`.
void normalize(std::vector<SmallEntry>& entries, std::size_t cap);

}  // namespace small_search

// Predecessor/successor over a small sorted key set with payloads.
class SmallPredecessorSet {
 public:
  static constexpr std::size_t kDefaultCap = 4096;

  SmallPredecessorSet() = default;
  explicit SmallPredecessorSet(std::vector<SmallEntry> entries,
                               std::size_t cap = kDefaultCap);

  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }
  std::span<const std::uint32_t> keys() const noexcept { return keys_; }
  std::span<const std::uint32_t> payloads() const noexcept { return payloads_; }

  // Largest key <= q.
  std::optional<PredecessorHit> predecessor(std::uint64_t q) const noexcept;
  // Smallest key >= q.
  std::optional<PredecessorHit> successor(std::uint64_t q) const noexcept;

 private:
  std::vector<std::uint32_t> keys_;
  std::vector<std::uint32_t> payloads_;
};

// Many small sets stored back to back (one key/payload array plus offsets).
// The per-leaf and per-top-tree-leaf structures use this to avoid one heap
// allocation per set.
class SmallPredecessorForest {
 public:
  SmallPredecessorForest() : offsets_{0} {}

  // Appends a set and returns its index.
  std::uint32_t add(std::vector<SmallEntry> entries,
                    std::size_t cap = SmallPredecessorSet::kDefaultCap);

  std::size_t set_count() const noexcept { return offsets_.size() - 1; }
  std::size_t set_size(std::uint32_t set) const noexcept {
    return offsets_[set + 1] - offsets_[set];
  }
  std::size_t total_entries() const noexcept { return keys_.size(); }

  std::optional<PredecessorHit> predecessor(std::uint32_t set, std::uint64_t q) const noexcept;
  std::optional<PredecessorHit> successor(std::uint32_t set, std::uint64_t q) const noexcept;

  std::size_t space_bytes() const noexcept {
    return keys_.capacity() * 4 + payloads_.capacity() * 4 + offsets_.capacity() * 4;
  }
  void shrink_to_fit();

 private:
  std::span<const std::uint32_t> keys_of(std::uint32_t set) const noexcept {
    return {keys_.data() + offsets_[set], offsets_[set + 1] - offsets_[set]};
  }

  std::vector<std::uint32_t> keys_;
  std::vector<std::uint32_t> payloads_;
  std::vector<std::uint32_t> offsets_;
};

}  // namespace swa
