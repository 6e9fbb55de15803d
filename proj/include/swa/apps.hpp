#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swa/intervals.hpp"
#include "swa/suffix_tree.hpp"
#include "swa/swa_index.hpp"

namespace swa {

struct AppOptions {
  Variant variant = Variant::linear;
  LinearOptions linear;
};

// Internal longest frequent prefix over a text X.
class IlfpIndex {
 public:
  explicit IlfpIndex(std::string text, const AppOptions& options = {});

  // Length L of the longest prefix X[i..i+L-1] of X[i..j] occurring at
  // least f times in X (1-based, inclusive). Throws std::out_of_range for
  // bad positions and std::invalid_argument for f == 0.
  std::size_t query(std::size_t i, std::size_t j, std::size_t f) const;

  const std::string& text() const noexcept { return text_; }
  const SuffixTree& suffix_tree() const noexcept { return st_; }
  const SwaIndex& swa() const noexcept { return swa_; }

 private:
  std::string text_;
  SuffixTree st_;
  SwaIndex swa_;
};

struct SubstringMatch {
  std::size_t start = 1;  // 1-based start in the pattern
  std::size_t length = 0;
  friend bool operator==(const SubstringMatch&, const SubstringMatch&) = default;
};

// Longest frequent substring of a pattern, against a dictionary (frequency
// = number of documents) or a single text (frequency = occurrences).
class LfsIndex {
 public:
  static LfsIndex dictionary(std::vector<std::string> documents, const AppOptions& options = {});
  static LfsIndex text(std::string text, const AppOptions& options = {});

  // Longest substring of p with frequency >= f; smallest start on ties,
  // (1, 0) when nothing qualifies. Throws std::invalid_argument for f == 0.
  SubstringMatch query(std::string_view p, std::size_t f) const;

  // Longest prefix length, at most loc.depth, of the string at `loc` whose
  // frequency is >= f.
  std::uint32_t frequent_prefix(const Locus& loc, std::size_t f) const;

  bool is_dictionary() const noexcept { return st_.generalized(); }
  std::size_t document_count() const noexcept { return st_.document_count(); }
  const SuffixTree& suffix_tree() const noexcept { return st_; }
  const SwaIndex& swa() const noexcept { return swa_; }

 private:
  LfsIndex(SuffixTree st, std::vector<weight_t> weights, const AppOptions& options);

  SuffixTree st_;
  SwaIndex swa_;
};

// S[i, j] = number of distinct length-i substrings of x whose document
// frequency in the dictionary lies in interval j. Uses one SWA query per
// distinct interval boundary per explicit node of the suffix tree of x.
// Throws std::invalid_argument if the index is not a dictionary index, x
// is empty, or an interval reaches past the document count.
ComplexityTable substring_complexity(const LfsIndex& dictionary, std::string_view x,
                                     const IntervalPartition& intervals);

}  // namespace swa
