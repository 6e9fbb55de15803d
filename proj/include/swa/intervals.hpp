#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace swa {

// Closed document-count interval [lo, hi].
struct Interval {
  std::uint32_t lo;
  std::uint32_t hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted, disjoint intervals inside [1, d].
class IntervalPartition {
 public:
  IntervalPartition() = default;
  // Throws std::invalid_argument if the intervals are empty, unsorted,
  // overlapping, or leave [1, d]; with `require_cover` they must also tile
  // [1, d] exactly.
  IntervalPartition(std::vector<Interval> intervals, std::uint32_t d, bool require_cover = false);

  // Parses "a1-b1,a2-b2,...".
  static IntervalPartition parse(std::string_view spec, std::uint32_t d, bool require_cover);

  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](std::size_t j) const noexcept { return intervals_[j]; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::uint32_t documents() const noexcept { return d_; }
  std::string label(std::size_t j) const;

 private:
  std::vector<Interval> intervals_;
  std::uint32_t d_ = 0;
};

// S[i, j] = number of distinct length-i substrings of X whose document
// frequency lies in interval j. Rows are lengths 1..|X|, columns intervals.
class ComplexityTable {
 public:
  ComplexityTable() = default;
  ComplexityTable(std::size_t lengths, IntervalPartition intervals)
      : rows_(lengths), intervals_(std::move(intervals)), cells_(rows_ * intervals_.size(), 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t columns() const noexcept { return intervals_.size(); }
  const IntervalPartition& intervals() const noexcept { return intervals_; }

  // 1-based length i and interval j.
  std::uint64_t at(std::size_t i, std::size_t j) const { return cells_.at((i - 1) * columns() + (j - 1)); }
  std::uint64_t& at(std::size_t i, std::size_t j) { return cells_.at((i - 1) * columns() + (j - 1)); }

  // Header "length<TAB>a-b..." then one row per length.
  void write_tsv(std::ostream& out) const;

  friend bool operator==(const ComplexityTable& a, const ComplexityTable& b) {
    return a.rows_ == b.rows_ && a.intervals_.intervals() == b.intervals_.intervals() &&
           a.cells_ == b.cells_;
  }

 private:
  std::size_t rows_ = 0;
  IntervalPartition intervals_;
  std::vector<std::uint64_t> cells_;
};

}  // namespace swa
