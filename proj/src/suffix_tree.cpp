#include "swa/suffix_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "swa/suffix_array.hpp"

namespace swa {

SuffixTree SuffixTree::build(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("cannot build a suffix tree of an empty text");
  SuffixTree st;
  st.text_length_ = text.size();
  const unsigned char last = static_cast<unsigned char>(text.back());
  bool sentinel = text.size() >= 2;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (static_cast<unsigned char>(text[i]) <= last) {
      sentinel = false;
      break;
    }
  }
  std::vector<std::uint32_t> symbols;
  symbols.reserve(text.size() + 2);
  for (unsigned char c : text) symbols.push_back(symbol_of(c));
  if (!sentinel) {
    symbols.push_back(1);
    st.added_sentinel_ = true;
  }
  st.build_from(std::move(symbols), 258);
  return st;
}

SuffixTree SuffixTree::build_generalized(std::span<const std::string> documents) {
  if (documents.empty()) throw std::invalid_argument("dictionary is empty");
  SuffixTree st;
  std::vector<std::uint32_t> symbols;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    for (unsigned char c : documents[d]) symbols.push_back(symbol_of(c));
    st.doc_end_.push_back(static_cast<std::uint32_t>(symbols.size()));
    symbols.push_back(static_cast<std::uint32_t>(258 + d));
    st.text_length_ += documents[d].size();
  }
  st.build_from(std::move(symbols), static_cast<std::uint32_t>(258 + documents.size()));
  return st;
}

std::uint32_t SuffixTree::leaf_depth(std::uint32_t start) const noexcept {
  if (doc_end_.empty()) return static_cast<std::uint32_t>(text_.size() - start);
  const auto end = *std::lower_bound(doc_end_.begin(), doc_end_.end(), start);
  return end - start + 1;
}

std::uint32_t SuffixTree::document_of(node_id leaf) const {
  if (!is_leaf(leaf)) throw std::invalid_argument("document_of: not a leaf");
  if (doc_end_.empty()) return 0;
  return static_cast<std::uint32_t>(std::lower_bound(doc_end_.begin(), doc_end_.end(), suffix_start(leaf)) -
                                    doc_end_.begin());
}

void SuffixTree::build_from(std::vector<std::uint32_t> symbols, std::uint32_t alphabet) {
  text_ = std::move(symbols);
  const std::size_t n = text_.size();
  {
    std::vector<std::uint32_t> s(text_);
    s.push_back(0);
    auto sa = suffix_array(s, alphabet);
    auto lcp = lcp_array(s, sa);
    // Drop the terminator, which sorts first.
    sa_.assign(sa.begin() + 1, sa.end());
    lcp.erase(lcp.begin());
    lcp[0] = 0;

    // Bottom-up construction over LCP intervals. Temporary ids; parents are
    // set when a node leaves the stack.
    std::vector<std::uint32_t> depth, left, right;
    std::vector<std::uint32_t> parent;
    auto make = [&](std::uint32_t d, std::uint32_t l) {
      depth.push_back(d);
      left.push_back(l);
      right.push_back(l);
      parent.push_back(no_node);
      return static_cast<std::uint32_t>(depth.size() - 1);
    };
    std::vector<std::uint32_t> stack{make(0, 0)};
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t leaf = make(leaf_depth(sa_[i]), i);
      const std::uint32_t next = i + 1 < n ? lcp[i + 1] : 0;
      if (next > depth[stack.back()]) {
        const auto m = make(next, i);
        parent[leaf] = m;
        stack.push_back(m);
        continue;
      }
      parent[leaf] = stack.back();
      while (depth[stack.back()] > next) {
        const auto top = stack.back();
        stack.pop_back();
        right[top] = i;
        if (depth[stack.back()] >= next) {
          parent[top] = stack.back();
        } else {
          const auto m = make(next, left[top]);
          parent[top] = m;
          stack.push_back(m);
        }
      }
    }
    right[stack.front()] = static_cast<std::uint32_t>(n - 1);

    // Renumber in preorder: by SA left end, ancestors (smaller depth) first.
    const std::size_t nodes = depth.size();
    std::vector<std::uint32_t> order(nodes);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return left[a] != left[b] ? left[a] < left[b] : depth[a] < depth[b];
    });
    std::vector<std::uint32_t> new_id(nodes);
    for (std::uint32_t i = 0; i < nodes; ++i) new_id[order[i]] = i;
    std::vector<node_id> par(nodes);
    depth_.resize(nodes);
    left_.resize(nodes);
    right_.resize(nodes);
    for (std::uint32_t old = 0; old < nodes; ++old) {
      const auto v = new_id[old];
      par[v] = parent[old] == no_node ? no_node : new_id[parent[old]];
      depth_[v] = depth[old];
      left_[v] = left[old];
      right_[v] = right[old];
    }
    tree_ = RootedTree::from_parents(std::move(par));
  }

  const std::size_t nodes = tree_.size();
  leaf_of_.assign(n, no_node);
  for (node_id v = 0; v < nodes; ++v) {
    if (tree_.is_leaf(v)) leaf_of_[sa_[left_[v]]] = v;
  }
  lca_ = LcaStructure(tree_);

  link_.assign(nodes, no_node);
  link_[0] = 0;
  for (node_id v = 1; v < nodes; ++v) {
    if (tree_.is_leaf(v)) continue;
    link_[v] = lca_.lca_unchecked(leaf_of_[sa_[left_[v]] + 1], leaf_of_[sa_[right_[v]] + 1]);
  }

  // Weighted ancestor by string depth: each heavy path keeps the start
  // depths of the heavy paths met on the way from the root to its bottom.
  hpd_ = HeavyPathDecomposition(tree_);
  std::vector<SmallEntry> entries;
  for (path_id p = 0; p < hpd_.path_count(); ++p) {
    entries.clear();
    for (path_id q = p;;) {
      const node_id top = hpd_.top(q);
      const node_id up = tree_.parent(top);
      entries.push_back({up == no_node ? 1 : depth_[up] + 1, q, tree_.depth(top)});
      if (up == no_node) break;
      q = hpd_.path_of(up);
    }
    wa_sets_.add(entries);
  }
  wa_sets_.shrink_to_fit();
}

node_id SuffixTree::child(node_id v, std::uint32_t symbol) const noexcept {
  const auto kids = tree_.children(v);
  const std::uint32_t d = depth_[v];
  auto it = std::lower_bound(kids.begin(), kids.end(), symbol,
                             [&](node_id c, std::uint32_t s) { return symbol_at(c, d) < s; });
  return it != kids.end() && symbol_at(*it, d) == symbol ? *it : no_node;
}

std::string SuffixTree::label(node_id v) const {
  std::string out;
  const std::uint32_t start = sa_[left_[v]];
  for (std::uint32_t d = 0; d < depth_[v]; ++d) {
    const auto s = text_[start + d];
    if (s < 2 || s >= 258) break;
    out.push_back(static_cast<char>(s - 2));
  }
  return out;
}

node_id SuffixTree::weighted_ancestor(node_id x, std::uint32_t length) const {
  if (x >= size()) throw std::out_of_range("weighted_ancestor: unknown node");
  if (length == 0 || length > depth_[x]) throw std::out_of_range("weighted_ancestor: length outside [1, depth]");
  const path_id q = wa_sets_.predecessor(hpd_.path_of(x), length)->payload;
  // Highest node on q whose depth is still >= length; depths fall as the
  // position rises.
  std::uint32_t lo = 1, hi = hpd_.length(q);
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo + 1) / 2;
    if (depth_[hpd_.node_at(q, mid)] >= length) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return hpd_.node_at(q, lo);
}

Locus SuffixTree::locus_of_substring(std::size_t i, std::size_t j) const {
  if (generalized()) throw std::logic_error("locus_of_substring needs a single-text suffix tree");
  if (i < 1 || i > j || j > text_length_) {
    throw std::out_of_range("substring [" + std::to_string(i) + "," + std::to_string(j) +
                            "] outside [1," + std::to_string(text_length_) + "]");
  }
  const auto len = static_cast<std::uint32_t>(j - i + 1);
  return {weighted_ancestor(leaf_of_[i - 1], len), len};
}

MatchingStatistics SuffixTree::matching_statistics(std::string_view pattern) const {
  MatchingStatistics ms;
  const std::size_t m = pattern.size();
  ms.length.resize(m);
  ms.locus.resize(m);
  auto sym = [&](std::size_t pos) { return symbol_of(static_cast<unsigned char>(pattern[pos])); };
  node_id node = 0;      // locus of the current match
  std::uint32_t len = 0;
  for (std::size_t i = 0; i < m; ++i) {
    // Extend.
    while (i + len < m) {
      if (len == depth_[node]) {
        const node_id c = child(node, sym(i + len));
        if (c == no_node) break;
        node = c;
      }
      if (symbol_at(node, len) != sym(i + len)) break;
      ++len;
    }
    ms.length[i] = len;
    ms.locus[i] = {len == 0 ? 0 : node, len};
    if (len == 0) {
      node = 0;
      continue;
    }
    // Drop the first character: suffix link, then skip/count back down.
    const std::uint32_t target = len - 1;
    node_id q;
    if (len == depth_[node] && !is_leaf(node)) {
      q = link_[node];
    } else {
      q = link_[tree_.parent(node)];
    }
    while (depth_[q] < target) q = child(q, sym(i + 1 + depth_[q]));
    node = target == 0 ? 0 : q;
    len = target;
  }
  return ms;
}

std::vector<weight_t> SuffixTree::leaf_count_weights() const {
  std::vector<weight_t> w(size());
  for (node_id v = 0; v < size(); ++v) w[v] = right_[v] - left_[v] + 1;
  return w;
}

std::vector<weight_t> SuffixTree::document_frequency_weights() const {
  if (!generalized()) throw std::logic_error("document frequency needs a generalized suffix tree");
  // Leaves minus, for each pair of SA-consecutive leaves of one document,
  // one at their LCA.
  std::vector<std::int64_t> count(size(), 0);
  std::vector<node_id> last(doc_end_.size(), no_node);
  for (std::uint32_t r = 0; r < sa_.size(); ++r) {
    const node_id leaf = leaf_of_[sa_[r]];
    count[leaf] += 1;
    const auto d = document_of(leaf);
    if (last[d] != no_node) count[lca_.lca_unchecked(last[d], leaf)] -= 1;
    last[d] = leaf;
  }
  for (node_id v = static_cast<node_id>(size()); v-- > 1;) count[tree_.parent(v)] += count[v];
  return {count.begin(), count.end()};
}

std::size_t SuffixTree::space_bytes() const noexcept {
  return (text_.capacity() + doc_end_.capacity() + sa_.capacity() + leaf_of_.capacity() + depth_.capacity() +
          left_.capacity() + right_.capacity() + link_.capacity()) * 4 +
         tree_.space_bytes() + lca_.space_bytes() + hpd_.space_bytes() + wa_sets_.space_bytes();
}

}  // namespace swa
