#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swa/intervals.hpp"
#include "swa/rooted_tree.hpp"

// Brute-force reference answers. None of these touch the index code they
// are used to check; they work from the raw tree or the raw strings.
namespace swa::oracle {

// Walk from u toward the root; first node with weight >= k.
std::optional<node_id> swa_brute(const RootedTree& tree, std::span<const weight_t> weights,
                                 node_id u, weight_t k);

// swa_brute(u, k) for every k in 1..weight(root)+1 (entry k-1), from one
// walk to the root.
std::vector<std::optional<node_id>> swa_brute_all(const RootedTree& tree,
                                                  std::span<const weight_t> weights, node_id u);

// Occurrences of s in x, overlapping ones included; "" occurs |x|+1 times.
std::size_t count_occurrences(std::string_view x, std::string_view s);

// Number of documents containing s.
std::size_t count_documents(std::span<const std::string> docs, std::string_view s);

// Longest L such that x[i..i+L-1] (1-based i) occurs at least f times in x,
// with L <= j-i+1.
std::size_t ilfp_brute(std::string_view x, std::size_t i, std::size_t j, std::size_t f);

// (start, length), 1-based start; longest substring of p occurring in at
// least f documents / at least f times in x. Ties go to the smallest start;
// length 0 is reported with start 1.
std::pair<std::size_t, std::size_t> lfs_dict_brute(std::span<const std::string> docs,
                                                   std::string_view p, std::size_t f);
std::pair<std::size_t, std::size_t> lfs_text_brute(std::string_view x, std::string_view p,
                                                   std::size_t f);

// Enumerates every distinct substring of x per length.
ComplexityTable complexity_brute(std::string_view x, std::span<const std::string> docs,
                                 const IntervalPartition& intervals);

}  // namespace swa::oracle
