#include "swa/oracles.hpp"

#include <set>

namespace swa::oracle {

std::optional<node_id> swa_brute(const RootedTree& tree, std::span<const weight_t> weights,
                                 node_id u, weight_t k) {
  for (node_id v = u; v != no_node; v = tree.parent(v)) {
    if (weights[v] >= k) return v;
  }
  return std::nullopt;
}

std::vector<std::optional<node_id>> swa_brute_all(const RootedTree& tree,
                                                  std::span<const weight_t> weights, node_id u) {
  std::vector<node_id> up;
  for (node_id v = u; v != no_node; v = tree.parent(v)) up.push_back(v);
  const weight_t top = weights[tree.root()];
  std::vector<std::optional<node_id>> out(std::size_t{top} + 1);
  // The first ancestor with weight >= k only moves up as k grows.
  std::size_t i = 0;
  for (std::uint64_t k = 1; k <= std::uint64_t{top} + 1; ++k) {
    while (i < up.size() && weights[up[i]] < k) ++i;
    if (i < up.size()) out[k - 1] = up[i];
  }
  return out;
}

std::size_t count_occurrences(std::string_view x, std::string_view s) {
  if (s.empty()) return x.size() + 1;
  std::size_t c = 0;
  for (std::size_t i = 0; i + s.size() <= x.size(); ++i) {
    if (x.compare(i, s.size(), s) == 0) ++c;
  }
  return c;
}

std::size_t count_documents(std::span<const std::string> docs, std::string_view s) {
  std::size_t c = 0;
  for (const auto& d : docs) {
    if (d.find(s) != std::string::npos) ++c;
  }
  return c;
}

std::size_t ilfp_brute(std::string_view x, std::size_t i, std::size_t j, std::size_t f) {
  std::size_t best = 0;
  for (std::size_t len = 1; len <= j - i + 1; ++len) {
    if (count_occurrences(x, x.substr(i - 1, len)) >= f) {
      best = len;
    } else {
      break;
    }
  }
  return best;
}

namespace {

template <typename Count>
std::pair<std::size_t, std::size_t> longest_qualifying(std::string_view p, Count&& qualifies) {
  std::pair<std::size_t, std::size_t> best{1, 0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t len = p.size() - i; len > best.second; --len) {
      if (qualifies(p.substr(i, len))) {
        best = {i + 1, len};
        break;
      }
    }
  }
  return best;
}

}  // namespace

std::pair<std::size_t, std::size_t> lfs_dict_brute(std::span<const std::string> docs,
                                                   std::string_view p, std::size_t f) {
  return longest_qualifying(p, [&](std::string_view s) { return count_documents(docs, s) >= f; });
}

std::pair<std::size_t, std::size_t> lfs_text_brute(std::string_view x, std::string_view p,
                                                   std::size_t f) {
  return longest_qualifying(p, [&](std::string_view s) { return count_occurrences(x, s) >= f; });
}

ComplexityTable complexity_brute(std::string_view x, std::span<const std::string> docs,
                                 const IntervalPartition& intervals) {
  ComplexityTable table(x.size(), intervals);
  for (std::size_t len = 1; len <= x.size(); ++len) {
    std::set<std::string_view> distinct;
    for (std::size_t i = 0; i + len <= x.size(); ++i) distinct.insert(x.substr(i, len));
    for (auto s : distinct) {
      const auto df = count_documents(docs, s);
      for (std::size_t j = 0; j < intervals.size(); ++j) {
        if (df >= intervals[j].lo && df <= intervals[j].hi) ++table.at(len, j + 1);
      }
    }
  }
  return table;
}

}  // namespace swa::oracle
