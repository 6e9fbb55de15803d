#include "swa/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace swa::gen {

std::string_view name(TreeFamily f) {
  switch (f) {
    case TreeFamily::path: return "path";
    case TreeFamily::star: return "star";
    case TreeFamily::caterpillar: return "caterpillar";
    case TreeFamily::random_binary: return "random_binary";
    case TreeFamily::random_attachment: return "random_attachment";
  }
  return "?";
}

std::string_view name(WeightScheme s) {
  switch (s) {
    case WeightScheme::size: return "size";
    case WeightScheme::leaf_count: return "leaf_count";
    case WeightScheme::random_heap: return "random_heap";
    case WeightScheme::plateau: return "plateau";
  }
  return "?";
}

RootedTree random_tree(TreeFamily family, std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("tree must have at least one node");
  // Built with node 0 as root and parent index < child index, then relabelled.
  std::vector<node_id> parent(n, no_node);
  auto pick = [&](std::size_t hi) {  // uniform in [0, hi)
    return static_cast<node_id>(std::uniform_int_distribution<std::size_t>(0, hi - 1)(rng));
  };
  switch (family) {
    case TreeFamily::path:
      for (std::size_t v = 1; v < n; ++v) parent[v] = static_cast<node_id>(v - 1);
      break;
    case TreeFamily::star:
      for (std::size_t v = 1; v < n; ++v) parent[v] = 0;
      break;
    case TreeFamily::caterpillar: {
      const std::size_t spine = std::max<std::size_t>(1, n / 2);
      for (std::size_t v = 1; v < spine; ++v) parent[v] = static_cast<node_id>(v - 1);
      for (std::size_t v = spine; v < n; ++v) parent[v] = pick(spine);
      break;
    }
    case TreeFamily::random_binary: {
      // Attach each node to a random node that still has a free child slot.
      std::vector<node_id> open{0, 0};
      for (std::size_t v = 1; v < n; ++v) {
        const std::size_t i = pick(open.size());
        parent[v] = open[i];
        open[i] = open.back();
        open.pop_back();
        open.push_back(static_cast<node_id>(v));
        open.push_back(static_cast<node_id>(v));
      }
      break;
    }
    case TreeFamily::random_attachment:
      for (std::size_t v = 1; v < n; ++v) parent[v] = pick(v);
      break;
  }
  std::vector<node_id> label(n);
  std::iota(label.begin(), label.end(), node_id{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<node_id> relabelled(n, no_node);
  for (std::size_t v = 0; v < n; ++v) {
    relabelled[label[v]] = parent[v] == no_node ? no_node : label[parent[v]];
  }
  return RootedTree::from_parents(std::move(relabelled));
}

std::vector<weight_t> random_weights(const RootedTree& tree, WeightScheme scheme,
                                     std::mt19937_64& rng) {
  const auto sizes = compute_sizes(tree);
  std::vector<weight_t> w(tree.size());
  switch (scheme) {
    case WeightScheme::size:
      std::copy(sizes.begin(), sizes.end(), w.begin());
      break;
    case WeightScheme::leaf_count: {
      const auto order = tree.preorder();
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const node_id v = *it;
        if (tree.is_leaf(v)) {
          w[v] = 1;
        } else {
          w[v] = 0;
          for (node_id c : tree.children(v)) w[v] += w[c];
        }
      }
      break;
    }
    case WeightScheme::random_heap:
      for (node_id v : tree.preorder()) {
        const node_id p = tree.parent(v);
        const weight_t hi = p == no_node ? sizes[v] : std::min<weight_t>(sizes[v], w[p]);
        w[v] = std::uniform_int_distribution<weight_t>(1, hi)(rng);
      }
      break;
    case WeightScheme::plateau: {
      // Round sizes down to a power of two; monotone, bounded by size.
      const unsigned shift = std::uniform_int_distribution<unsigned>(0, 2)(rng);
      for (node_id v = 0; v < tree.size(); ++v) {
        const weight_t s = sizes[v];
        const weight_t floor2 = std::bit_floor(s);
        w[v] = std::max<weight_t>(1, floor2 >> shift);
      }
      break;
    }
  }
  return w;
}

std::string random_string(std::size_t length, std::size_t sigma, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(sigma) - 1);
  std::string s(length, 'a');
  for (auto& c : s) c = static_cast<char>('a' + d(rng));
  return s;
}

}  // namespace swa::gen
