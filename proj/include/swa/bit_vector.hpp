#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swa {

// Append-only bit buffer used to assemble the raw bits of a BitVector.
class BitWriter {
 public:
  void push_back(bool bit);
  // Appends `count` copies of `bit`.
  void append_run(bool bit, std::size_t count);

  std::size_t size() const noexcept { return size_; }
  std::vector<std::uint64_t> release() && { return std::move(words_); }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Immutable bit string with constant-time rank and select for both bit
// values. Positions are 1-based at this interface.
//
// Layout: 2048-bit superblocks store absolute 1-counts, 256-bit blocks store
// 16-bit counts relative to their superblock (about 10% overhead). Select
// keeps one sample per 4096 occurrences of each bit value, narrows to a
// superblock range, and finishes with in-word bit tricks.
class BitVector {
 public:
  BitVector() = default;
  BitVector(std::vector<std::uint64_t> words, std::size_t size);

  static BitVector from_string(std::string_view bits);
  static BitVector from_bools(std::span<const bool> bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Bit at 1-based position `pos`.
  bool operator[](std::size_t pos) const;

  // Number of `bit` values in B[1..i]; throws std::out_of_range if i > size().
  std::size_t rank(bool bit, std::size_t i) const;
  // Position of the i-th `bit` value (1-based); throws std::out_of_range if
  // i is zero or exceeds the number of such bits.
  std::size_t select(bool bit, std::size_t i) const;

  std::size_t count(bool bit) const noexcept {
    return bit ? ones_ : size_ - ones_;
  }

  // Unchecked variants used on query hot paths; arguments must be in range.
  std::size_t rank1_unchecked(std::size_t i) const noexcept;
  std::size_t select1_unchecked(std::size_t i) const noexcept;
  std::size_t select0_unchecked(std::size_t i) const noexcept;

  std::string to_string() const;

  std::size_t raw_bits() const noexcept { return words_.size() * 64; }
  std::size_t directory_bits() const noexcept;

 private:
  static constexpr std::size_t kWordsPerBlock = 4;
  static constexpr std::size_t kBlocksPerSuper = 8;
  static constexpr std::size_t kWordsPerSuper = kWordsPerBlock * kBlocksPerSuper;
  static constexpr std::size_t kBlockBits = 64 * kWordsPerBlock;
  static constexpr std::size_t kSuperBits = 64 * kWordsPerSuper;
  static constexpr std::size_t kSampleRate = 4096;

  void build_directory();
  std::uint64_t word(std::size_t w, bool bit) const noexcept {
    return bit ? words_[w] : ~words_[w];
  }
  std::size_t super_rank(std::size_t s, bool bit) const noexcept {
    return bit ? super_[s] : s * kSuperBits - super_[s];
  }
  std::size_t select_unchecked(bool bit, std::size_t i) const noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  std::vector<std::uint64_t> super_;
  std::vector<std::uint16_t> block_;
  std::vector<std::uint32_t> samples_[2];
};

// Position (0-based) of the (r+1)-th set bit of x; r < popcount(x).
unsigned select_in_word(std::uint64_t x, unsigned r) noexcept;

}  // namespace swa
