#include "swa/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "swa/apps.hpp"
#include "swa/generators.hpp"
#include "swa/oracles.hpp"
#include "swa/swa_index.hpp"
#include "swa/tree_io.hpp"

namespace swa::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Fatal input problem; `where` is a file name (or "<stdin>").
class input_error : public std::runtime_error {
 public:
  input_error(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what) {}
};

struct Common {
  std::string variant = "linear";
  double epsilon = 1.0;
  bool eager = false;
  std::string format = "tsv";
  bool verify = false;
  std::uint64_t seed = 1;

  bool jsonl() const { return format == "jsonl"; }
  AppOptions app_options() const {
    AppOptions o;
    o.variant = parse_variant(variant);
    o.linear.epsilon = epsilon;
    o.linear.eager_table = eager;
    return o;
  }
};

struct DictSource {
  std::string lines;
  std::string dir;
};

void strip_cr(std::string& s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw input_error(path, "cannot open");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Text files are raw bytes minus one trailing line break.
std::string read_text(const std::string& path) {
  std::string s = read_file(path);
  if (!s.empty() && s.back() == '\n') {
    s.pop_back();
    strip_cr(s);
  }
  if (s.empty()) throw input_error(path, "line 1: empty text");
  return s;
}

std::vector<std::string> read_dictionary(const DictSource& src) {
  std::vector<std::string> docs;
  if (!src.lines.empty()) {
    std::ifstream f(src.lines, std::ios::binary);
    if (!f) throw input_error(src.lines, "cannot open");
    std::string line;
    std::size_t no = 0;
    while (std::getline(f, line)) {
      ++no;
      strip_cr(line);
      if (line.empty()) throw input_error(src.lines, "line " + std::to_string(no) + ": empty document");
      docs.push_back(std::move(line));
    }
    if (docs.empty()) throw input_error(src.lines, "no documents");
  } else {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(src.dir, ec)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
    if (ec) throw input_error(src.dir, "cannot list directory");
    std::sort(files.begin(), files.end());
    for (const auto& p : files) docs.push_back(read_text(p.string()));
    if (docs.empty()) throw input_error(src.dir, "no documents");
  }
  return docs;
}

struct QueryFile {
  std::string name;
  std::vector<std::string> lines;
};

QueryFile read_queries(const std::string& path, std::istream& in) {
  QueryFile q;
  std::istream* src = &in;
  std::ifstream f;
  if (path.empty() || path == "-") {
    q.name = "<stdin>";
  } else {
    f.open(path, std::ios::binary);
    if (!f) throw input_error(path, "cannot open");
    q.name = path;
    src = &f;
  }
  std::string line;
  while (std::getline(*src, line)) {
    strip_cr(line);
    q.lines.push_back(std::move(line));
  }
  return q;
}

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s, const QueryFile& q, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw input_error(q.name, "line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                                  std::string(s) + "'");
  }
  return v;
}

// Numeric query lines; an empty line parses to an empty vector (answered
// with ERR), anything else must have exactly `arity` integers.
std::vector<std::vector<std::uint64_t>> parse_numeric(const QueryFile& q, std::size_t arity,
                                                      const char* shape) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t i = 0; i < q.lines.size(); ++i) {
    const auto f = fields_of(q.lines[i]);
    std::vector<std::uint64_t> row;
    if (!f.empty()) {
      if (f.size() != arity) {
        throw input_error(q.name, "line " + std::to_string(i + 1) + ": expected '" + shape + "'");
      }
      for (auto s : f) row.push_back(parse_u64(s, q, i + 1));
    }
    out.push_back(std::move(row));
  }
  return out;
}

struct PatternQuery {
  std::uint64_t f = 0;
  std::string pattern;
  bool empty = false;
};

// "f pattern": the pattern is everything after the first space.
std::vector<PatternQuery> parse_patterns(const QueryFile& q) {
  std::vector<PatternQuery> out;
  for (std::size_t i = 0; i < q.lines.size(); ++i) {
    const auto& line = q.lines[i];
    PatternQuery pq;
    if (line.empty()) {
      pq.empty = true;
    } else {
      const auto sp = line.find(' ');
      pq.f = parse_u64(std::string_view(line).substr(0, sp), q, i + 1);
      if (sp != std::string::npos) pq.pattern = line.substr(sp + 1);
    }
    out.push_back(std::move(pq));
  }
  return out;
}

// Picks roughly `budget` of `count` answers for --verify.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::size_t count, std::size_t budget = 256)
      : rng_(seed), pick_(count == 0 ? 1.0 : std::min(1.0, static_cast<double>(budget) / count)) {}
  bool next() { return pick_(rng_); }

 private:
  std::mt19937_64 rng_;
  std::bernoulli_distribution pick_;
};

struct Verifier {
  bool enabled = false;
  std::size_t checked = 0;
  std::size_t mismatches = 0;

  void check(bool ok, std::size_t line, const std::string& detail, std::ostream& err) {
    ++checked;
    if (!ok) {
      ++mismatches;
      err << "verify: mismatch on query line " << line << ": " << detail << '\n';
    }
  }
  int finish(std::ostream& err) const {
    if (!enabled) return 0;
    err << "verify: " << checked << " answers checked, " << mismatches << " mismatches\n";
    return mismatches ? 1 : 0;
  }
};

void emit_error(std::ostream& out, const Common& c, const std::string& reason) {
  if (c.jsonl()) {
    out << json{{"error", reason}}.dump() << '\n';
  } else {
    out << "ERR " << reason << '\n';
  }
}

WeightedTree load_tree(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw input_error(path, "cannot open");
  WeightedTree t;
  try {
    t = read_weighted_tree(f);
  } catch (const parse_error& e) {
    throw input_error(path, e.what());
  }
  if (const auto bad = validate_weights(t.tree, t.weights)) {
    throw input_error(path, "line " + std::to_string(t.line_of_node[bad->node]) + ": " + bad->describe());
  }
  return t;
}

int cmd_swa(const Common& c, const std::string& tree_path, const std::string& query_path,
            std::istream& in, std::ostream& out, std::ostream& err) {
  auto wt = load_tree(tree_path);
  const auto queries = read_queries(query_path, in);
  const auto rows = parse_numeric(queries, 2, "u k");
  const auto opts = c.app_options();
  const RootedTree tree_copy = c.verify ? wt.tree : RootedTree{};
  const SwaIndex index(std::move(wt.tree), wt.weights, opts.variant, opts.linear);
  const auto& tree = index.core().tree();
  const weight_t root_weight = index.weights()[tree.root()];
  Verifier v{c.verify};
  Sampler sample(c.seed, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.empty()) {
      emit_error(out, c, "empty query");
      continue;
    }
    const std::uint64_t u = r[0], k = r[1];
    if (u == 0 || u > tree.size()) {
      emit_error(out, c, "unknown node " + std::to_string(u));
      continue;
    }
    if (k == 0) {
      emit_error(out, c, "k must be positive");
      continue;
    }
    const auto x = static_cast<node_id>(u - 1);
    std::optional<node_id> ans;
    if (k <= root_weight) ans = index.query(x, static_cast<weight_t>(k));
    if (c.jsonl()) {
      out << json{{"u", u}, {"k", k}, {"answer", ans ? json(*ans + 1) : json(nullptr)}}.dump() << '\n';
    } else {
      out << u << ' ' << k << ' ' << (ans ? std::to_string(*ans + 1) : "-") << '\n';
    }
    if (v.enabled && sample.next()) {
      const auto expect =
          k <= root_weight ? oracle::swa_brute(tree_copy, wt.weights, x, static_cast<weight_t>(k)) : std::nullopt;
      v.check(expect == ans, i + 1, "swa(" + std::to_string(u) + ", " + std::to_string(k) + ")", err);
    }
  }
  return v.finish(err);
}

int cmd_ilfp(const Common& c, const std::string& text_path, const std::string& query_path,
             std::istream& in, std::ostream& out, std::ostream& err) {
  const auto text = read_text(text_path);
  const auto queries = read_queries(query_path, in);
  const auto rows = parse_numeric(queries, 3, "i j f");
  const IlfpIndex index(text, c.app_options());
  Verifier v{c.verify};
  Sampler sample(c.seed, rows.size());
  for (std::size_t q = 0; q < rows.size(); ++q) {
    const auto& r = rows[q];
    if (r.empty()) {
      emit_error(out, c, "empty query");
      continue;
    }
    std::size_t len = 0;
    try {
      len = index.query(r[0], r[1], r[2]);
    } catch (const std::exception& e) {
      emit_error(out, c, e.what());
      continue;
    }
    if (c.jsonl()) {
      out << json{{"i", r[0]}, {"j", r[1]}, {"f", r[2]}, {"length", len}}.dump() << '\n';
    } else {
      out << r[0] << ' ' << r[1] << ' ' << r[2] << ' ' << len << '\n';
    }
    if (v.enabled && sample.next()) {
      v.check(oracle::ilfp_brute(text, r[0], r[1], r[2]) == len, q + 1, "ilfp", err);
    }
  }
  return v.finish(err);
}

int answer_patterns(const Common& c, const LfsIndex& index, const QueryFile& queries,
                    const std::function<std::pair<std::size_t, std::size_t>(const PatternQuery&)>& brute,
                    std::ostream& out, std::ostream& err) {
  const auto rows = parse_patterns(queries);
  Verifier v{c.verify};
  Sampler sample(c.seed, rows.size());
  for (std::size_t q = 0; q < rows.size(); ++q) {
    const auto& r = rows[q];
    if (r.empty) {
      emit_error(out, c, "empty query");
      continue;
    }
    if (r.f == 0) {
      emit_error(out, c, "frequency threshold f must be positive");
      continue;
    }
    const auto m = index.query(r.pattern, r.f);
    if (c.jsonl()) {
      out << json{{"f", r.f}, {"start", m.start}, {"length", m.length}}.dump() << '\n';
    } else {
      out << m.start << ' ' << m.length << '\n';
    }
    if (v.enabled && sample.next()) {
      const auto [s, l] = brute(r);
      v.check(s == m.start && l == m.length, q + 1, "lfs", err);
    }
  }
  return v.finish(err);
}

int cmd_lfs(const Common& c, const DictSource& dict, const std::string& query_path,
            std::istream& in, std::ostream& out, std::ostream& err) {
  const auto docs = read_dictionary(dict);
  const auto queries = read_queries(query_path, in);
  const auto index = LfsIndex::dictionary(docs, c.app_options());
  return answer_patterns(
      c, index, queries, [&](const PatternQuery& r) { return oracle::lfs_dict_brute(docs, r.pattern, r.f); },
      out, err);
}

int cmd_lfs_text(const Common& c, const std::string& text_path, const std::string& query_path,
                 std::istream& in, std::ostream& out, std::ostream& err) {
  const auto text = read_text(text_path);
  const auto queries = read_queries(query_path, in);
  const auto index = LfsIndex::text(text, c.app_options());
  return answer_patterns(
      c, index, queries, [&](const PatternQuery& r) { return oracle::lfs_text_brute(text, r.pattern, r.f); },
      out, err);
}

void write_table(const Common& c, const ComplexityTable& table, const IntervalPartition& intervals,
                 std::ostream& out) {
  if (!c.jsonl()) {
    table.write_tsv(out);
    return;
  }
  for (std::size_t i = 1; i <= table.rows(); ++i) {
    json row{{"length", i}};
    for (std::size_t j = 1; j <= table.columns(); ++j) row[intervals.label(j - 1)] = table.at(i, j);
    out << row.dump() << '\n';
  }
}

int cmd_complexity(const Common& c, const DictSource& dict, const std::string& text_path,
                   const std::string& interval_spec, std::ostream& out, std::ostream& err) {
  const auto docs = read_dictionary(dict);
  const auto text = read_text(text_path);
  std::optional<IntervalPartition> intervals;
  try {
    intervals.emplace(IntervalPartition::parse(interval_spec, static_cast<std::uint32_t>(docs.size()), true));
  } catch (const std::invalid_argument& e) {
    throw input_error("--intervals", e.what());
  }
  const auto index = LfsIndex::dictionary(docs, c.app_options());
  const auto table = substring_complexity(index, text, *intervals);
  write_table(c, table, *intervals, out);
  Verifier v{c.verify};
  if (v.enabled) v.check(table == oracle::complexity_brute(text, docs, *intervals), 1, "complexity table", err);
  return v.finish(err);
}

// ---- bench ----

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    const bool pow = item.rfind("2^", 0) == 0;
    const std::string_view digits = pow ? std::string_view(item).substr(2) : std::string_view(item);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || (pow && v > 30)) {
      throw input_error("--sizes", "bad size '" + item + "'");
    }
    if (pow) v = std::size_t{1} << v;
    if (v == 0) throw input_error("--sizes", "sizes must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw input_error("--sizes", "no sizes given");
  return out;
}

template <typename E>
E parse_enum(const std::string& name, std::span<const E> all, const char* flag) {
  for (E e : all) {
    if (gen::name(e) == name) return e;
  }
  throw input_error(flag, "unknown value '" + name + "'");
}

volatile std::uint64_t g_sink = 0;  // keeps timed queries from being optimised out

struct BenchOptions {
  std::string sizes = "2^14,2^16,2^18,2^20";
  std::size_t queries = 1000;
  std::string family = "random_attachment";
  std::string scheme = "size";
};

int cmd_bench(const Common& c, bool variant_given, const BenchOptions& b, std::ostream& out) {
  const auto sizes = parse_sizes(b.sizes);
  const auto family = parse_enum<gen::TreeFamily>(b.family, gen::kAllFamilies, "--family");
  const auto scheme = parse_enum<gen::WeightScheme>(b.scheme, gen::kAllSchemes, "--scheme");
  std::vector<Variant> variants{Variant::log, Variant::linear};
  if (variant_given) variants = {parse_variant(c.variant)};
  const auto opts = c.app_options();
  using clock = std::chrono::steady_clock;
  if (!c.jsonl()) {
    out << "variant\tn\tbuild_ms\tquery_ns_p50\tquery_ns_p90\tquery_ns_p99\twords_per_node\tbits_per_nlogn\n";
  }
  for (std::size_t n : sizes) {
    std::mt19937_64 rng(c.seed ^ n);
    auto tree = gen::random_tree(family, n, rng);
    auto weights = gen::random_weights(tree, scheme, rng);
    const weight_t top = weights[tree.root()];
    std::vector<std::pair<node_id, weight_t>> qs(b.queries);
    for (auto& q : qs) {
      q = {static_cast<node_id>(rng() % n), static_cast<weight_t>(1 + rng() % top)};
    }
    for (Variant var : variants) {
      const auto t0 = clock::now();
      const SwaIndex index(tree, weights, var, opts.linear);
      const double build_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      std::uint64_t sink = 0;
      for (const auto& [u, k] : qs) sink += index.query(u, k).value_or(0);
      constexpr int kRepeat = 16;
      std::vector<double> ns;
      ns.reserve(qs.size());
      for (const auto& [u, k] : qs) {
        const auto q0 = clock::now();
        for (int r = 0; r < kRepeat; ++r) sink += index.query(u, k).value_or(0);
        ns.push_back(std::chrono::duration<double, std::nano>(clock::now() - q0).count() / kRepeat);
      }
      std::sort(ns.begin(), ns.end());
      auto pct = [&](double p) {
        return ns.empty() ? 0.0 : ns[std::min(ns.size() - 1, static_cast<std::size_t>(p * ns.size()))];
      };
      const auto space = index.space();
      const double lg = std::max(1.0, std::log2(static_cast<double>(n)));
      const double c_bits = static_cast<double>(space.total_bytes()) * 8.0 / (static_cast<double>(n) * lg);
      const char* vname = var == Variant::log ? "log" : "linear";
      if (c.jsonl()) {
        out << json{{"variant", vname},         {"n", n},
                    {"build_ms", build_ms},     {"query_ns_p50", pct(0.5)},
                    {"query_ns_p90", pct(0.9)}, {"query_ns_p99", pct(0.99)},
                    {"words_per_node", space.words_per_node(n)}, {"bits_per_nlogn", c_bits}}
                   .dump()
            << '\n';
      } else {
        out << vname << '\t' << n << '\t' << build_ms << '\t' << pct(0.5) << '\t' << pct(0.9) << '\t'
            << pct(0.99) << '\t' << space.words_per_node(n) << '\t' << c_bits << '\n';
      }
      g_sink = g_sink + sink;
    }
  }
  return 0;
}

// ---- verify ----

struct VerifyOptions {
  std::string tree;
  std::string text;
  std::string intervals;
  std::size_t queries = 10000;
  std::size_t size = 1000;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
};

CheckResult verify_tree(const std::string& name, const RootedTree& tree, const std::vector<weight_t>& weights,
                        const AppOptions& opts, std::size_t queries, std::mt19937_64& rng) {
  CheckResult r{name};
  const SwaIndex index(tree, weights, opts.variant, opts.linear);
  const weight_t top = weights[tree.root()];
  for (std::size_t q = 0; q < queries; ++q) {
    const auto u = static_cast<node_id>(rng() % tree.size());
    const auto k = static_cast<weight_t>(1 + rng() % (std::uint64_t{top} + 1));
    const auto got = k <= top ? index.query(u, k) : std::nullopt;
    ++r.cases;
    if (got != oracle::swa_brute(tree, weights, u, k)) ++r.mismatches;
  }
  return r;
}

// A pattern drawn near the source text so that answers are not all zero.
std::string sample_pattern(const std::string& source, unsigned sigma, std::mt19937_64& rng) {
  const std::size_t len = 1 + rng() % std::min<std::size_t>(32, source.size() + 4);
  std::string p;
  if (!source.empty() && rng() % 4 != 0) {
    const std::size_t s = rng() % source.size();
    p = source.substr(s, len);
  } else {
    p = gen::random_string(len, sigma, rng);
  }
  if (!p.empty() && rng() % 2) p[rng() % p.size()] = static_cast<char>('a' + rng() % sigma);
  return p;
}

CheckResult verify_ilfp(const std::string& text, const AppOptions& opts, std::size_t queries,
                        std::mt19937_64& rng) {
  CheckResult r{"ilfp"};
  const IlfpIndex index(text, opts);
  const std::size_t n = text.size();
  for (std::size_t q = 0; q < queries; ++q) {
    std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
    if (i > j) std::swap(i, j);
    const std::size_t f = 1 + rng() % (n / 4 + 2);
    ++r.cases;
    if (index.query(i, j, f) != oracle::ilfp_brute(text, i, j, f)) ++r.mismatches;
  }
  return r;
}

CheckResult verify_lfs_text(const std::string& text, const AppOptions& opts, std::size_t queries,
                            std::mt19937_64& rng) {
  CheckResult r{"lfs-text"};
  const auto index = LfsIndex::text(text, opts);
  for (std::size_t q = 0; q < queries; ++q) {
    const auto p = sample_pattern(text, 4, rng);
    const std::size_t f = 1 + rng() % (text.size() / 8 + 2);
    const auto m = index.query(p, f);
    const auto [s, l] = oracle::lfs_text_brute(text, p, f);
    ++r.cases;
    if (m.start != s || m.length != l) ++r.mismatches;
  }
  return r;
}

CheckResult verify_lfs_dict(const std::vector<std::string>& docs, const AppOptions& opts,
                            std::size_t queries, std::mt19937_64& rng) {
  CheckResult r{"lfs"};
  const auto index = LfsIndex::dictionary(docs, opts);
  for (std::size_t q = 0; q < queries; ++q) {
    const auto p = sample_pattern(docs[rng() % docs.size()], 4, rng);
    const std::size_t f = 1 + rng() % (docs.size() + 1);
    const auto m = index.query(p, f);
    const auto [s, l] = oracle::lfs_dict_brute(docs, p, f);
    ++r.cases;
    if (m.start != s || m.length != l) ++r.mismatches;
  }
  return r;
}

CheckResult verify_complexity(const std::vector<std::string>& docs, const std::string& x,
                              const IntervalPartition& intervals, const AppOptions& opts) {
  CheckResult r{"complexity", 1, 0};
  const auto index = LfsIndex::dictionary(docs, opts);
  if (!(substring_complexity(index, x, intervals) == oracle::complexity_brute(x, docs, intervals))) {
    r.mismatches = 1;
  }
  return r;
}

int cmd_verify(const Common& c, const DictSource& dict, const VerifyOptions& vo, std::ostream& out) {
  const auto opts = c.app_options();
  std::mt19937_64 rng(c.seed);
  std::vector<CheckResult> results;
  const bool have_dict = !dict.lines.empty() || !dict.dir.empty();
  const bool custom = !vo.tree.empty() || !vo.text.empty() || have_dict;
  if (!vo.tree.empty()) {
    auto wt = load_tree(vo.tree);
    results.push_back(verify_tree("swa", wt.tree, wt.weights, opts, vo.queries, rng));
  }
  std::optional<std::string> text;
  if (!vo.text.empty()) {
    text = read_text(vo.text);
    results.push_back(verify_ilfp(*text, opts, vo.queries, rng));
    results.push_back(verify_lfs_text(*text, opts, vo.queries, rng));
  }
  if (have_dict) {
    const auto docs = read_dictionary(dict);
    results.push_back(verify_lfs_dict(docs, opts, vo.queries, rng));
    if (text && !vo.intervals.empty()) {
      std::optional<IntervalPartition> iv;
      try {
        iv.emplace(IntervalPartition::parse(vo.intervals, static_cast<std::uint32_t>(docs.size()), true));
      } catch (const std::invalid_argument& e) {
        throw input_error("--intervals", e.what());
      }
      results.push_back(verify_complexity(docs, *text, *iv, opts));
    }
  }
  if (!custom) {
    for (auto family : gen::kAllFamilies) {
      for (auto scheme : gen::kAllSchemes) {
        auto tree = gen::random_tree(family, vo.size, rng);
        auto weights = gen::random_weights(tree, scheme, rng);
        const std::string name = "swa/" + std::string(gen::name(family)) + "/" + std::string(gen::name(scheme));
        results.push_back(verify_tree(name, tree, weights, opts, vo.queries / 20 + 1, rng));
      }
    }
    const std::size_t string_queries = std::min<std::size_t>(vo.queries, 2000);
    const std::string x = gen::random_string(256, 4, rng);
    results.push_back(verify_ilfp(x, opts, string_queries, rng));
    results.push_back(verify_lfs_text(x, opts, string_queries, rng));
    std::vector<std::string> docs;
    for (int d = 0; d < 8; ++d) docs.push_back(gen::random_string(8 + rng() % 40, 2 + d % 3, rng));
    results.push_back(verify_lfs_dict(docs, opts, string_queries, rng));
    const auto iv = IntervalPartition::parse("1-1,2-3,4-8", 8, true);
    results.push_back(verify_complexity(docs, gen::random_string(64, 3, rng), iv, opts));
  }
  std::size_t bad = 0;
  if (!c.jsonl()) out << "check\tcases\tmismatches\n";
  for (const auto& r : results) {
    bad += r.mismatches;
    if (c.jsonl()) {
      out << json{{"check", r.name}, {"cases", r.cases}, {"mismatches", r.mismatches}}.dump() << '\n';
    } else {
      out << r.name << '\t' << r.cases << '\t' << r.mismatches << '\n';
    }
  }
  return bad ? 1 : 0;
}

void add_dict_options(CLI::App* cmd, DictSource& dict, bool required) {
  auto* lines = cmd->add_option("--dict-lines", dict.lines, "Dictionary file, one document per line");
  auto* dir = cmd->add_option("--dict-dir", dict.dir, "Dictionary directory, one document per regular file");
  lines->excludes(dir);
  dir->excludes(lines);
  if (required) {
    cmd->callback([cmd, lines, dir] {
      if (lines->count() + dir->count() == 0) {
        throw CLI::RequiredError("one of --dict-lines or --dict-dir");
      }
      (void)cmd;
    });
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Size-constrained weighted ancestor queries and suffix-tree frequency queries.\n"
               "Node ids and string positions are 1-based. Query files default to stdin."};
  app.name("swa_cli");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common c;
  auto* variant_opt = app.add_option("--variant", c.variant, "SWA structure: log or linear (default linear)")
                          ->check(CLI::IsMember({"log", "linear"}));
  app.add_option("--epsilon", c.epsilon, "Micro-tree size parameter of the linear variant (default 1.0)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--eager-table", c.eager, "Fill the micro-tree tables at build time instead of on first use");
  app.add_option("--format", c.format, "Output format: tsv or jsonl (default tsv)")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  app.add_flag("--verify", c.verify,
               "Re-check a seeded sample of answers against brute force; exit 1 on mismatch");
  app.add_option("--seed", c.seed, "Seed for sampling in bench, verify and --verify (default 1)");

  std::string tree_path, text_path, query_path, interval_spec;
  DictSource dict;
  BenchOptions bench;
  VerifyOptions vo;

  auto* swa = app.add_subcommand("swa", "Answer 'u k' query lines with the SWA node ('-' for none)");
  swa->add_option("tree", tree_path, "Tree file: n, then 'node_id parent_id weight' lines")->required();
  swa->add_option("queries", query_path, "Query file ('-' or omitted: stdin)");

  auto* ilfp = app.add_subcommand("ilfp", "Answer 'i j f' lines with the internal longest frequent prefix");
  ilfp->add_option("text", text_path, "Text file (one trailing newline is dropped)")->required();
  ilfp->add_option("queries", query_path, "Query file ('-' or omitted: stdin)");

  auto* lfs = app.add_subcommand("lfs", "Answer 'f pattern' lines with the longest substring in >= f documents");
  add_dict_options(lfs, dict, true);
  lfs->add_option("queries", query_path, "Query file ('-' or omitted: stdin)");

  auto* lfs_text =
      app.add_subcommand("lfs-text", "Answer 'f pattern' lines with the longest substring occurring >= f times");
  lfs_text->add_option("text", text_path, "Text file (one trailing newline is dropped)")->required();
  lfs_text->add_option("queries", query_path, "Query file ('-' or omitted: stdin)");

  auto* complexity =
      app.add_subcommand("complexity", "Count distinct substrings of a text per length and frequency class");
  add_dict_options(complexity, dict, true);
  complexity->add_option("text", text_path, "Text file (one trailing newline is dropped)")->required();
  complexity->add_option("--intervals", interval_spec, "Frequency classes 'a1-b1,a2-b2,...' covering [1,d]")
      ->required();

  auto* bench_cmd = app.add_subcommand("bench", "Build and query timings over a sweep of random trees");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes; '2^k' allowed (default 2^14,2^16,2^18,2^20)");
  bench_cmd->add_option("--queries", bench.queries, "Queries per size (default 1000)");
  bench_cmd->add_option("--family", bench.family,
                        "Tree family: path, star, caterpillar, random_binary, random_attachment");
  bench_cmd->add_option("--scheme", bench.scheme, "Weights: size, leaf_count, random_heap, plateau");

  auto* verify_cmd =
      app.add_subcommand("verify", "Compare sampled indexed answers with brute force; random inputs by default");
  verify_cmd->add_option("--tree", vo.tree, "Check SWA queries on this tree file");
  verify_cmd->add_option("--text", vo.text, "Check ilfp and lfs-text on this text file");
  add_dict_options(verify_cmd, dict, false);
  verify_cmd->add_option("--intervals", vo.intervals, "With a dictionary and --text, also check complexity");
  verify_cmd->add_option("--queries", vo.queries, "Sampled queries per check (default 10000)");
  verify_cmd->add_option("--size", vo.size, "Node count of the generated trees (default 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*swa) return cmd_swa(c, tree_path, query_path, in, out, err);
    if (*ilfp) return cmd_ilfp(c, text_path, query_path, in, out, err);
    if (*lfs) return cmd_lfs(c, dict, query_path, in, out, err);
    if (*lfs_text) return cmd_lfs_text(c, text_path, query_path, in, out, err);
    if (*complexity) return cmd_complexity(c, dict, text_path, interval_spec, out, err);
    if (*bench_cmd) return cmd_bench(c, variant_opt->count() > 0, bench, out);
    if (*verify_cmd) return cmd_verify(c, dict, vo, out);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const config_error& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace swa::cli
