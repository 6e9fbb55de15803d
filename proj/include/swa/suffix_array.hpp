#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace swa {

// Suffix array by induced sorting (SA-IS). `s` must end with a unique 0
// and every symbol must be < alphabet. Returns all |s| suffixes, so the
// first entry is |s|-1.
std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> s, std::uint32_t alphabet);

// lcp[i] = longest common prefix of suffixes sa[i-1] and sa[i]; lcp[0] = 0.
std::vector<std::uint32_t> lcp_array(std::span<const std::uint32_t> s, std::span<const std::uint32_t> sa);

}  // namespace swa
