#include "swa/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace swa {

void BitWriter::push_back(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (bit) words_.back() |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

void BitWriter::append_run(bool bit, std::size_t count) {
  while (count > 0) {
    if (size_ % 64 == 0) words_.push_back(0);
    const std::size_t offset = size_ % 64;
    const std::size_t take = std::min<std::size_t>(count, 64 - offset);
    if (bit) {
      const std::uint64_t run =
          take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      words_.back() |= run << offset;
    }
    size_ += take;
    count -= take;
  }
}

unsigned select_in_word(std::uint64_t x, unsigned r) noexcept {
#if defined(__BMI2__)
  return static_cast<unsigned>(std::countr_zero(_pdep_u64(std::uint64_t{1} << r, x)));
#else
  unsigned base = 0;
  for (;;) {
    const unsigned c = static_cast<unsigned>(std::popcount(x & 0xffu));
    if (r < c) break;
    r -= c;
    x >>= 8;
    base += 8;
  }
  for (; r > 0; --r) x &= x - 1;
  return base + static_cast<unsigned>(std::countr_zero(x));
#endif
}

BitVector::BitVector(std::vector<std::uint64_t> words, std::size_t size)
    : words_(std::move(words)), size_(size) {
  // At least one word past the end so rank(size()) never reads out of bounds.
  const std::size_t needed =
      (size_ / 64 + 1 + kWordsPerBlock - 1) / kWordsPerBlock * kWordsPerBlock;
  words_.resize(needed, 0);
  if (size_ % 64 != 0) words_[size_ / 64] &= (std::uint64_t{1} << (size_ % 64)) - 1;
  for (std::size_t w = (size_ + 63) / 64; w < words_.size(); ++w) words_[w] = 0;
  build_directory();
}

BitVector BitVector::from_string(std::string_view bits) {
  BitWriter w;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may only contain '0' and '1'");
    w.push_back(c == '1');
  }
  const std::size_t n = w.size();
  return BitVector(std::move(w).release(), n);
}

BitVector BitVector::from_bools(std::span<const bool> bits) {
  BitWriter w;
  for (bool b : bits) w.push_back(b);
  const std::size_t n = w.size();
  return BitVector(std::move(w).release(), n);
}

void BitVector::build_directory() {
  const std::size_t blocks = words_.size() / kWordsPerBlock;
  const std::size_t supers = (blocks + kBlocksPerSuper - 1) / kBlocksPerSuper;
  super_.assign(supers + 1, 0);
  block_.assign(blocks, 0);
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (b % kBlocksPerSuper == 0) super_[b / kBlocksPerSuper] = total;
    block_[b] = static_cast<std::uint16_t>(total - super_[b / kBlocksPerSuper]);
    for (std::size_t w = b * kWordsPerBlock; w < (b + 1) * kWordsPerBlock; ++w) {
      total += static_cast<std::size_t>(std::popcount(words_[w]));
    }
  }
  super_[supers] = total;
  ones_ = total;

  // samples_[b][j] = superblock holding the (j*kSampleRate + 1)-th b-bit.
  for (int b = 0; b < 2; ++b) {
    const bool bit = b == 1;
    auto& samples = samples_[b];
    samples.clear();
    const std::size_t occurrences = count(bit);
    std::size_t next = 1;
    for (std::size_t s = 0; s < supers && next <= occurrences; ++s) {
      while (next <= occurrences && super_rank(s + 1, bit) >= next) {
        samples.push_back(static_cast<std::uint32_t>(s));
        next += kSampleRate;
      }
    }
  }
}

bool BitVector::operator[](std::size_t pos) const {
  if (pos == 0 || pos > size_) throw std::out_of_range("bit position out of range");
  const std::size_t p = pos - 1;
  return (words_[p / 64] >> (p % 64)) & 1u;
}

std::size_t BitVector::rank1_unchecked(std::size_t i) const noexcept {
  const std::size_t w = i / 64;
  const std::size_t b = w / kWordsPerBlock;
  std::size_t r = super_[b / kBlocksPerSuper] + block_[b];
  for (std::size_t k = b * kWordsPerBlock; k < w; ++k) {
    r += static_cast<std::size_t>(std::popcount(words_[k]));
  }
  const std::uint64_t mask = (std::uint64_t{1} << (i % 64)) - 1;
  return r + static_cast<std::size_t>(std::popcount(words_[w] & mask));
}

std::size_t BitVector::rank(bool bit, std::size_t i) const {
  if (i > size_) throw std::out_of_range("rank position exceeds bit vector length");
  const std::size_t ones = rank1_unchecked(i);
  return bit ? ones : i - ones;
}

std::size_t BitVector::select_unchecked(bool bit, std::size_t i) const noexcept {
  const auto& samples = samples_[bit ? 1 : 0];
  const std::size_t j = (i - 1) / kSampleRate;
  std::size_t lo = samples[j];
  std::size_t hi = j + 1 < samples.size() ? samples[j + 1] : super_.size() - 2;
  // Superblock s in [lo, hi] with super_rank(s) < i <= super_rank(s + 1).
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (super_rank(mid, bit) < i) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::size_t s = lo;
  std::size_t remaining = i - super_rank(s, bit);

  const std::size_t first_block = s * kBlocksPerSuper;
  const std::size_t last_block = std::min(block_.size(), first_block + kBlocksPerSuper);
  auto block_rank = [&](std::size_t b) -> std::size_t {
    return bit ? block_[b] : (b - first_block) * kBlockBits - block_[b];
  };
  std::size_t b = first_block;
  while (b + 1 < last_block && block_rank(b + 1) < remaining) ++b;
  remaining -= block_rank(b);

  std::size_t w = b * kWordsPerBlock;
  for (;; ++w) {
    const auto c = static_cast<std::size_t>(std::popcount(word(w, bit)));
    if (c >= remaining) break;
    remaining -= c;
  }
  return w * 64 + select_in_word(word(w, bit), static_cast<unsigned>(remaining - 1)) + 1;
}

std::size_t BitVector::select1_unchecked(std::size_t i) const noexcept {
  return select_unchecked(true, i);
}

std::size_t BitVector::select0_unchecked(std::size_t i) const noexcept {
  return select_unchecked(false, i);
}

std::size_t BitVector::select(bool bit, std::size_t i) const {
  if (i == 0 || i > count(bit)) throw std::out_of_range("select rank exceeds number of matching bits");
  return select_unchecked(bit, i);
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t p = 0; p < size_; ++p) {
    if ((words_[p / 64] >> (p % 64)) & 1u) out[p] = '1';
  }
  return out;
}

std::size_t BitVector::directory_bits() const noexcept {
  return super_.size() * 64 + block_.size() * 16 +
         (samples_[0].size() + samples_[1].size()) * 32;
}

}  // namespace swa
