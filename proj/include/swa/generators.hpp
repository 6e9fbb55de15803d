#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "swa/rooted_tree.hpp"

// Random inputs for tests, benchmarks and the CLI's verify mode.
namespace swa::gen {

enum class TreeFamily { path, star, caterpillar, random_binary, random_attachment };
enum class WeightScheme { size, leaf_count, random_heap, plateau };

inline constexpr TreeFamily kAllFamilies[] = {TreeFamily::path, TreeFamily::star,
                                              TreeFamily::caterpillar, TreeFamily::random_binary,
                                              TreeFamily::random_attachment};
inline constexpr WeightScheme kAllSchemes[] = {WeightScheme::size, WeightScheme::leaf_count,
                                               WeightScheme::random_heap, WeightScheme::plateau};

std::string_view name(TreeFamily f);
std::string_view name(WeightScheme s);

// n-node tree of the given shape. Node ids are randomly relabelled so the
// root is not always 0 and children are not in construction order.
RootedTree random_tree(TreeFamily family, std::size_t n, std::mt19937_64& rng);

// A size-constrained max-heap weight function.
// size: subtree size. leaf_count: leaves below. random_heap: uniform in
// [1, min(size, weight(parent))]. plateau: sizes rounded down to a few
// levels so long runs of equal weights appear.
std::vector<weight_t> random_weights(const RootedTree& tree, WeightScheme scheme,
                                     std::mt19937_64& rng);

std::string random_string(std::size_t length, std::size_t sigma, std::mt19937_64& rng);

}  // namespace swa::gen
