#include "swa/suffix_array.hpp"

#include <limits>
#include <stdexcept>

namespace swa {
namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

void bucket_bounds(std::span<const std::uint32_t> s, std::uint32_t k, std::vector<std::uint32_t>& b,
                   bool ends) {
  b.assign(k, 0);
  for (auto c : s) ++b[c];
  std::uint32_t sum = 0;
  for (std::uint32_t c = 0; c < k; ++c) {
    sum += b[c];
    b[c] = ends ? sum : sum - b[c];
  }
}

void induce(std::span<const std::uint32_t> s, std::span<std::uint32_t> sa, const std::vector<bool>& is_s,
            std::uint32_t k, std::vector<std::uint32_t>& b) {
  const std::size_t n = s.size();
  bucket_bounds(s, k, b, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (sa[i] == kEmpty || sa[i] == 0) continue;
    const std::uint32_t j = sa[i] - 1;
    if (!is_s[j]) sa[b[s[j]]++] = j;
  }
  bucket_bounds(s, k, b, true);
  for (std::size_t i = n; i-- > 0;) {
    if (sa[i] == kEmpty || sa[i] == 0) continue;
    const std::uint32_t j = sa[i] - 1;
    if (is_s[j]) sa[--b[s[j]]] = j;
  }
}

void sais(std::span<const std::uint32_t> s, std::span<std::uint32_t> sa, std::uint32_t k) {
  const std::size_t n = s.size();
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<bool> is_s(n, false);
  is_s[n - 1] = true;
  for (std::size_t i = n - 1; i-- > 0;) {
    is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
  }
  auto is_lms = [&](std::size_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

  std::vector<std::uint32_t> b;
  std::fill(sa.begin(), sa.end(), kEmpty);
  bucket_bounds(s, k, b, true);
  for (std::size_t i = 1; i < n; ++i) {
    if (is_lms(i)) sa[--b[s[i]]] = static_cast<std::uint32_t>(i);
  }
  induce(s, sa, is_s, k, b);

  // Sorted LMS substrings, then names.
  std::size_t n1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_lms(sa[i])) sa[n1++] = sa[i];
  }
  std::vector<std::uint32_t> name_at(n / 2 + 1, kEmpty);
  std::uint32_t names = 0;
  std::uint32_t prev = kEmpty;
  for (std::size_t i = 0; i < n1; ++i) {
    const std::uint32_t pos = sa[i];
    bool differ = prev == kEmpty;
    for (std::size_t d = 0; !differ; ++d) {
      if (s[pos + d] != s[prev + d] || is_s[pos + d] != is_s[prev + d]) {
        differ = true;
      } else if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) {
        break;
      }
    }
    if (differ) {
      ++names;
      prev = pos;
    }
    name_at[pos / 2] = names - 1;
  }
  std::vector<std::uint32_t> s1;
  s1.reserve(n1);
  for (auto x : name_at) {
    if (x != kEmpty) s1.push_back(x);
  }
  std::vector<std::uint32_t> sa1(n1);
  if (names < n1) {
    sais(s1, sa1, names);
  } else {
    for (std::size_t i = 0; i < n1; ++i) sa1[s1[i]] = static_cast<std::uint32_t>(i);
  }

  // LMS suffixes in sorted order seed the final induction.
  std::vector<std::uint32_t> lms;
  lms.reserve(n1);
  for (std::size_t i = 1; i < n; ++i) {
    if (is_lms(i)) lms.push_back(static_cast<std::uint32_t>(i));
  }
  std::fill(sa.begin(), sa.end(), kEmpty);
  bucket_bounds(s, k, b, true);
  for (std::size_t i = n1; i-- > 0;) {
    const std::uint32_t j = lms[sa1[i]];
    sa[--b[s[j]]] = j;
  }
  induce(s, sa, is_s, k, b);
}

}  // namespace

std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> s, std::uint32_t alphabet) {
  if (s.empty() || s.back() != 0) throw std::invalid_argument("suffix_array: input must end with 0");
  if (s.size() >= kEmpty) throw std::invalid_argument("suffix_array: input too long");
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == 0 || s[i] >= alphabet) throw std::invalid_argument("suffix_array: symbol out of range");
  }
  std::vector<std::uint32_t> sa(s.size());
  sais(s, sa, alphabet);
  return sa;
}

std::vector<std::uint32_t> lcp_array(std::span<const std::uint32_t> s, std::span<const std::uint32_t> sa) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::uint32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace swa
