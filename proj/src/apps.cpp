#include "swa/apps.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace swa {

IlfpIndex::IlfpIndex(std::string text, const AppOptions& options)
    : text_(std::move(text)), st_(SuffixTree::build(text_)) {
  swa_ = SwaIndex(st_.tree(), st_.leaf_count_weights(), options.variant, options.linear);
}

std::size_t IlfpIndex::query(std::size_t i, std::size_t j, std::size_t f) const {
  if (f == 0) throw std::invalid_argument("frequency threshold f must be positive");
  const Locus loc = st_.locus_of_substring(i, j);
  const auto w = swa_.weights();
  if (f > w[st_.root()]) return 0;
  const auto k = static_cast<weight_t>(f);
  if (w[loc.node] >= k) return loc.depth;
  const auto r = swa_.query(loc.node, k);
  return r ? st_.string_depth(*r) : 0;
}

LfsIndex::LfsIndex(SuffixTree st, std::vector<weight_t> weights, const AppOptions& options)
    : st_(std::move(st)) {
  swa_ = SwaIndex(st_.tree(), std::move(weights), options.variant, options.linear);
}

LfsIndex LfsIndex::dictionary(std::vector<std::string> documents, const AppOptions& options) {
  auto st = SuffixTree::build_generalized(documents);
  auto w = st.document_frequency_weights();
  return LfsIndex(std::move(st), std::move(w), options);
}

LfsIndex LfsIndex::text(std::string text, const AppOptions& options) {
  auto st = SuffixTree::build(text);
  auto w = st.leaf_count_weights();
  return LfsIndex(std::move(st), std::move(w), options);
}

std::uint32_t LfsIndex::frequent_prefix(const Locus& loc, std::size_t f) const {
  if (loc.depth == 0) return 0;
  const auto w = swa_.weights();
  if (f > w[st_.root()]) return 0;
  const auto k = static_cast<weight_t>(f);
  if (w[loc.node] >= k) return loc.depth;
  const auto r = swa_.query(loc.node, k);
  return r ? st_.string_depth(*r) : 0;
}

SubstringMatch LfsIndex::query(std::string_view p, std::size_t f) const {
  if (f == 0) throw std::invalid_argument("frequency threshold f must be positive");
  const auto ms = st_.matching_statistics(p);
  SubstringMatch best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (ms.length[i] <= best.length) continue;
    const std::size_t len = frequent_prefix(ms.locus[i], f);
    if (len > best.length) best = {i + 1, len};
  }
  return best;
}

ComplexityTable substring_complexity(const LfsIndex& dictionary, std::string_view x,
                                     const IntervalPartition& intervals) {
  if (!dictionary.is_dictionary()) throw std::invalid_argument("substring complexity needs a dictionary index");
  if (x.empty()) throw std::invalid_argument("text X is empty");
  const std::size_t d = dictionary.document_count();
  for (const auto& iv : intervals.intervals()) {
    if (iv.lo < 1 || iv.hi > d) {
      throw std::invalid_argument("interval " + std::to_string(iv.lo) + "-" + std::to_string(iv.hi) +
                                  " reaches past the " + std::to_string(d) + " documents");
    }
  }
  const auto& gst = dictionary.suffix_tree();
  const auto st = SuffixTree::build(x);
  const auto ms = gst.matching_statistics(x);

  // Frequency falls from alpha_j to below alpha_j at one length, so each
  // class j is the length band (b(beta_j + 1), b(alpha_j)].
  std::vector<std::uint64_t> thresholds;
  for (const auto& iv : intervals.intervals()) {
    thresholds.push_back(iv.lo);
    thresholds.push_back(std::uint64_t{iv.hi} + 1);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  auto slot = [&](std::uint64_t t) {
    return std::lower_bound(thresholds.begin(), thresholds.end(), t) - thresholds.begin();
  };

  const std::size_t len_x = x.size();
  const std::size_t tau = intervals.size();
  std::vector<std::int64_t> diff((len_x + 2) * tau, 0);
  std::vector<std::uint32_t> b(thresholds.size());
  for (node_id v = 1; v < st.size(); ++v) {
    const std::uint32_t start = st.suffix_start(v);
    const std::uint32_t pd = st.string_depth(st.tree().parent(v));
    const std::uint32_t cap = std::min<std::uint32_t>(st.string_depth(v), static_cast<std::uint32_t>(len_x - start));
    if (cap <= pd) continue;
    const std::uint32_t m = std::min(cap, ms.length[start]);
    if (m <= pd) continue;
    const Locus g{gst.weighted_ancestor(ms.locus[start].node, m), m};
    for (std::size_t t = 0; t < thresholds.size(); ++t) b[t] = dictionary.frequent_prefix(g, thresholds[t]);
    for (std::size_t j = 0; j < tau; ++j) {
      const std::uint32_t hi = b[slot(intervals[j].lo)];
      const std::uint32_t lo = std::max(pd, b[slot(std::uint64_t{intervals[j].hi} + 1)]);
      if (hi <= lo) continue;
      diff[(lo + 1) * tau + j] += 1;
      diff[(hi + 1) * tau + j] -= 1;
    }
  }
  ComplexityTable table(len_x, intervals);
  std::vector<std::int64_t> run(tau, 0);
  for (std::size_t len = 1; len <= len_x; ++len) {
    for (std::size_t j = 0; j < tau; ++j) {
      run[j] += diff[len * tau + j];
      table.at(len, j + 1) = static_cast<std::uint64_t>(run[j]);
    }
  }
  return table;
}

}  // namespace swa
