#include "swa/intervals.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace swa {

IntervalPartition::IntervalPartition(std::vector<Interval> intervals, std::uint32_t d,
                                     bool require_cover)
    : intervals_(std::move(intervals)), d_(d) {
  if (intervals_.empty()) throw std::invalid_argument("interval list is empty");
  std::uint32_t next = 1;
  for (const auto& iv : intervals_) {
    if (iv.lo < 1 || iv.lo > iv.hi || iv.hi > d_) {
      throw std::invalid_argument("interval " + std::to_string(iv.lo) + "-" + std::to_string(iv.hi) +
                                  " is not inside [1," + std::to_string(d_) + "]");
    }
    if (iv.lo < next) throw std::invalid_argument("intervals overlap or are not sorted");
    if (require_cover && iv.lo != next) {
      throw std::invalid_argument("intervals leave a gap before " + std::to_string(iv.lo));
    }
    next = iv.hi + 1;
  }
  if (require_cover && next != d_ + 1) {
    throw std::invalid_argument("intervals do not reach the document count " + std::to_string(d_));
  }
}

IntervalPartition IntervalPartition::parse(std::string_view spec, std::uint32_t d,
                                           bool require_cover) {
  std::vector<Interval> out;
  auto number = [&](std::string_view s) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("bad interval bound '" + std::string(s) + "'");
    }
    return v;
  };
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      const auto v = number(item);
      out.push_back({v, v});
    } else {
      out.push_back({number(item.substr(0, dash)), number(item.substr(dash + 1))});
    }
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return IntervalPartition(std::move(out), d, require_cover);
}

std::string IntervalPartition::label(std::size_t j) const {
  return std::to_string(intervals_[j].lo) + "-" + std::to_string(intervals_[j].hi);
}

void ComplexityTable::write_tsv(std::ostream& out) const {
  out << "length";
  for (std::size_t j = 0; j < columns(); ++j) out << '\t' << intervals_.label(j);
  out << '\n';
  for (std::size_t i = 1; i <= rows_; ++i) {
    out << i;
    for (std::size_t j = 1; j <= columns(); ++j) out << '\t' << at(i, j);
    out << '\n';
  }
}

}  // namespace swa
