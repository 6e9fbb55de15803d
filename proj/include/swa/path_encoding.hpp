#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swa/bit_vector.hpp"
#include "swa/heavy_path.hpp"
#include "swa/types.hpp"

namespace swa {

// Unary-coded weight profile of one heavy path v_1..v_l (bottom to top):
// enc(weight(v_1)) enc(weight(v_2) - weight(v_1)) ... where enc(x) is x
// ones followed by a zero. The path has l zeros and weight(v_l) ones.
class PathEncoding {
 public:
  PathEncoding() = default;
  PathEncoding(BitVector bits, std::uint32_t length) : bits_(std::move(bits)), length_(length) {}

  const BitVector& bits() const noexcept { return bits_; }
  std::uint32_t length() const noexcept { return length_; }
  weight_t top_weight() const noexcept { return static_cast<weight_t>(bits_.count(true)); }

  // Weight of the node at 1-based position `pos` from the bottom.
  weight_t weight_at(std::uint32_t pos) const;

 private:
  BitVector bits_;
  std::uint32_t length_ = 0;
};

// Throws weight_error if weights decrease going up the path.
PathEncoding encode_path(std::span<const node_id> bottom_to_top, std::span<const weight_t> weights);

// 1-based position of the lowest path node with weight >= k, computed as
// rank_0(B, select_1(B, k)) + 1; nullopt if k exceeds the top weight.
std::optional<std::uint32_t> path_lowest_with_weight(const PathEncoding& enc, weight_t k);

// The encodings of every heavy path of a tree, concatenated into a single
// rank/select bit vector with per-path bit offsets and prefix 1-counts.
class PathEncodingSet {
 public:
  PathEncodingSet() = default;
  PathEncodingSet(const HeavyPathDecomposition& hpd, std::span<const weight_t> weights);

  // Requires 1 <= k <= top weight of p. One select and one rank.
  std::uint32_t lowest_with_weight(path_id p, weight_t k) const noexcept {
    const std::size_t j = bits_.select1_unchecked(ones_before_[p] + k);
    const std::size_t zeros_before = offsets_[p] - ones_before_[p];
    return static_cast<std::uint32_t>(j - bits_.rank1_unchecked(j) - zeros_before + 1);
  }

  std::string bits_of(path_id p) const;
  std::size_t total_bits() const noexcept { return bits_.size(); }
  std::size_t space_bytes() const noexcept;

 private:
  BitVector bits_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint64_t> ones_before_;
};

}  // namespace swa
