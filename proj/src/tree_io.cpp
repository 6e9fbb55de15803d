#include "swa/tree_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace swa {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view field, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw parse_error(std::string("expected non-negative integer for ") + what + ", got '" +
                          std::string(field) + "'",
                      line_no);
  }
  return value;
}

}  // namespace

WeightedTree read_weighted_tree(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<ParentLink> links;
  std::vector<weight_t> weights;
  std::unordered_map<std::uint32_t, std::size_t> line_of;

  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 1) throw parse_error("expected node count on first line", line_no);
      const auto count = parse_uint(fields[0], line_no, "node count");
      if (count == 0 || count >= no_node) throw parse_error("node count out of range", line_no);
      n = count;
      have_header = true;
      links.reserve(n);
      weights.assign(n, 0);
      continue;
    }
    if (fields.size() != 3) {
      throw parse_error("expected 'node_id parent_id weight'", line_no);
    }
    if (links.size() == n) throw parse_error("more node lines than the declared count", line_no);
    const auto id = parse_uint(fields[0], line_no, "node id");
    const auto parent = parse_uint(fields[1], line_no, "parent id");
    const auto weight = parse_uint(fields[2], line_no, "weight");
    if (id == 0 || id > n) throw parse_error("node id outside [1,n]", line_no);
    if (parent > n) throw parse_error("parent id outside [0,n]", line_no);
    if (weight > 0xffffffffull) throw parse_error("weight too large", line_no);
    if (line_of.count(static_cast<std::uint32_t>(id))) {
      throw parse_error("duplicate node id " + std::to_string(id), line_no);
    }
    line_of[static_cast<std::uint32_t>(id)] = line_no;
    ParentLink link{static_cast<std::uint32_t>(id), std::nullopt};
    if (parent != 0) link.parent = static_cast<std::uint32_t>(parent);
    links.push_back(link);
    weights[id - 1] = static_cast<weight_t>(weight);
  }
  if (!have_header) throw parse_error("empty tree file", 0);
  if (links.size() != n) {
    throw parse_error("expected " + std::to_string(n) + " node lines, found " +
                          std::to_string(links.size()),
                      line_no);
  }
  try {
    WeightedTree out{build_tree(links), std::move(weights), std::vector<std::size_t>(n, 0)};
    for (const auto& [id, line] : line_of) out.line_of_node[id - 1] = line;
    return out;
  } catch (const tree_error& e) {
    const auto it = line_of.find(e.node());
    throw parse_error(e.what(), it == line_of.end() ? 0 : it->second);
  }
}

void write_weighted_tree(std::ostream& out, const RootedTree& tree,
                         std::span<const weight_t> weights) {
  out << tree.size() << '\n';
  for (node_id v = 0; v < tree.size(); ++v) {
    const node_id p = tree.parent(v);
    out << v + 1 << ' ' << (p == no_node ? 0 : p + 1) << ' ' << weights[v] << '\n';
  }
}

}  // namespace swa
