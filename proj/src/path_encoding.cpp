#include "swa/path_encoding.hpp"

#include <stdexcept>

namespace swa {
namespace {

void append_path(BitWriter& out, std::span<const node_id> bottom_to_top,
                 std::span<const weight_t> weights) {
  weight_t prev = 0;
  for (node_id v : bottom_to_top) {
    const weight_t w = weights[v];
    if (w < prev) {
      throw weight_error("weights decrease going up the path at node " + std::to_string(v + 1));
    }
    out.append_run(true, w - prev);
    out.push_back(false);
    prev = w;
  }
}

}  // namespace

weight_t PathEncoding::weight_at(std::uint32_t pos) const {
  return static_cast<weight_t>(bits_.rank(true, bits_.select(false, pos)));
}

PathEncoding encode_path(std::span<const node_id> bottom_to_top, std::span<const weight_t> weights) {
  BitWriter w;
  append_path(w, bottom_to_top, weights);
  const std::size_t n = w.size();
  return PathEncoding(BitVector(std::move(w).release(), n),
                      static_cast<std::uint32_t>(bottom_to_top.size()));
}

std::optional<std::uint32_t> path_lowest_with_weight(const PathEncoding& enc, weight_t k) {
  if (k == 0) throw std::invalid_argument("threshold k must be positive");
  if (k > enc.top_weight()) return std::nullopt;
  const std::size_t j = enc.bits().select(true, k);
  return static_cast<std::uint32_t>(enc.bits().rank(false, j) + 1);
}

PathEncodingSet::PathEncodingSet(const HeavyPathDecomposition& hpd,
                                 std::span<const weight_t> weights) {
  BitWriter w;
  const std::size_t paths = hpd.path_count();
  offsets_.reserve(paths + 1);
  ones_before_.reserve(paths);
  std::uint64_t ones = 0;
  for (path_id p = 0; p < paths; ++p) {
    offsets_.push_back(w.size());
    ones_before_.push_back(ones);
    append_path(w, hpd.path(p), weights);
    ones += weights[hpd.top(p)];
  }
  offsets_.push_back(w.size());
  const std::size_t n = w.size();
  bits_ = BitVector(std::move(w).release(), n);
}

std::string PathEncodingSet::bits_of(path_id p) const {
  std::string out;
  for (std::size_t i = offsets_[p] + 1; i <= offsets_[p + 1]; ++i) out.push_back(bits_[i] ? '1' : '0');
  return out;
}

std::size_t PathEncodingSet::space_bytes() const noexcept {
  return (bits_.raw_bits() + bits_.directory_bits()) / 8 + offsets_.capacity() * 8 +
         ones_before_.capacity() * 8;
}

}  // namespace swa
