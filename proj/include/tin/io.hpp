#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tin/decomposition.hpp"
#include "tin/error.hpp"
#include "tin/graph.hpp"
#include "tin/packing.hpp"
#include "tin/rational.hpp"

// Text formats. Every vertex id in a file is 1-indexed; lines starting with
// `c` are comments and blank lines are skipped.
//
//   graph    p tw <n> <m>, then m lines "<u> <v>"
//   weights  "<v> <value>" with value p/q, integer or decimal; unlisted vertices weigh 1
//   td       s td <bags> <max-bag-size> <n>; "b <id> <v>..."; "r <id> <u>..." (marked
//            subset of bag id); tree edges "<i> <j>"
//   family   s fam <count>; "f <id> <weight> <size> <v1> ... <v_size>"
//   set      whitespace-separated vertex ids

namespace tin::io {

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-comment, non-blank line.
  bool next(Line& line) {
    while (std::getline(in_, buffer_)) {
      ++number_;
      line.number = number_;
      line.tokens.clear();
      std::string_view rest(buffer_);
      while (!rest.empty()) {
        auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        auto end = rest.find_first_of(" \t\r");
        line.tokens.push_back(rest.substr(0, end));
        rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
      }
      if (line.tokens.empty() || line.tokens.front() == "c") continue;
      return true;
    }
    return false;
  }

private:
  std::istream& in_;
  std::string buffer_;
  std::size_t number_ = 0;
};

inline long parse_long(std::string_view token, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  return value;
}

// 1-indexed id in [1, count] -> 0-indexed
inline int parse_index(std::string_view token, long count, std::size_t line, const char* what) {
  long v = parse_long(token, line);
  if (v < 1 || v > count)
    throw ParseError(std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(count), line);
  return static_cast<int>(v - 1);
}

} // namespace detail

inline Graph read_graph(std::istream& in) {
  detail::LineReader reader(in);
  detail::Line line;
  if (!reader.next(line)) throw ParseError("empty graph file");
  if (line.tokens.size() != 4 || line.tokens[0] != "p" || line.tokens[1] != "tw")
    throw ParseError("expected header 'p tw <n> <m>'", line.number);
  long n = detail::parse_long(line.tokens[2], line.number);
  long m = detail::parse_long(line.tokens[3], line.number);
  if (n < 0 || m < 0) throw ParseError("negative count in header", line.number);
  std::vector<Edge> edges;
  while (reader.next(line)) {
    if (line.tokens.size() != 2) throw ParseError("expected an edge line '<u> <v>'", line.number);
    int u = detail::parse_index(line.tokens[0], n, line.number, "vertex");
    int v = detail::parse_index(line.tokens[1], n, line.number, "vertex");
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u + 1), line.number);
    edges.emplace_back(u, v);
  }
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "p tw " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

inline WeightMap read_weights(std::istream& in, int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(1));
  std::vector<char> given(static_cast<std::size_t>(n), 0);
  detail::LineReader reader(in);
  detail::Line line;
  while (reader.next(line)) {
    if (line.tokens.size() != 2) throw ParseError("expected '<vertex> <weight>'", line.number);
    int v = detail::parse_index(line.tokens[0], n, line.number, "vertex");
    if (given[v]) throw ParseError("weight of vertex " + std::to_string(v + 1) + " given twice", line.number);
    given[v] = 1;
    try {
      w[v] = parse_rational(line.tokens[1]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.number);
    }
    if (w[v] < 0) throw ParseError("negative weight", line.number);
  }
  return WeightMap(std::move(w));
}

inline void write_weights(std::ostream& out, const WeightMap& w) {
  for (int v = 0; v < w.size(); ++v) out << v + 1 << ' ' << format_rational(w[v]) << '\n';
}

inline RefinedTreeDecomposition read_td(std::istream& in) {
  detail::LineReader reader(in);
  detail::Line line;
  if (!reader.next(line)) throw ParseError("empty decomposition file");
  if (line.tokens.size() != 5 || line.tokens[0] != "s" || line.tokens[1] != "td")
    throw ParseError("expected header 's td <bags> <max-bag-size> <n>'", line.number);
  long bags = detail::parse_long(line.tokens[2], line.number);
  long max_bag = detail::parse_long(line.tokens[3], line.number);
  long n = detail::parse_long(line.tokens[4], line.number);
  if (bags < 1 || max_bag < 0 || n < 0) throw ParseError("bad counts in header", line.number);

  RefinedTreeDecomposition td(static_cast<int>(n));
  for (long i = 0; i < bags; ++i) td.add_node(VertexSet(static_cast<int>(n)));
  std::vector<char> bag_seen(static_cast<std::size_t>(bags), 0), marks_seen(static_cast<std::size_t>(bags), 0);
  std::vector<std::size_t> mark_lines(static_cast<std::size_t>(bags), 0);

  while (reader.next(line)) {
    const auto& tok = line.tokens;
    if (tok[0] == "b" || tok[0] == "r") {
      if (tok.size() < 2) throw ParseError("missing bag id", line.number);
      int id = detail::parse_index(tok[1], bags, line.number, "bag id");
      auto& seen = tok[0] == "b" ? bag_seen : marks_seen;
      if (seen[id]) throw ParseError(std::string("duplicate '") + std::string(tok[0]) + "' line for bag " +
                                         std::to_string(id + 1), line.number);
      seen[id] = 1;
      auto& target = tok[0] == "b" ? td.bags[id] : td.refined[id];
      for (std::size_t i = 2; i < tok.size(); ++i) target.insert(detail::parse_index(tok[i], n, line.number, "vertex"));
      if (tok[0] == "r") mark_lines[id] = line.number;
    } else {
      if (tok.size() != 2) throw ParseError("expected a tree edge '<i> <j>'", line.number);
      td.add_edge(detail::parse_index(tok[0], bags, line.number, "bag id"),
                  detail::parse_index(tok[1], bags, line.number, "bag id"));
    }
  }
  for (long i = 0; i < bags; ++i) {
    if (!bag_seen[i]) throw ParseError("bag " + std::to_string(i + 1) + " is never declared");
    if (!td.refined[i].is_subset_of(td.bags[i]))
      throw ParseError("refined set of bag " + std::to_string(i + 1) + " is not inside the bag", mark_lines[i]);
    if (td.bags[i].size() > max_bag)
      throw ParseError("bag " + std::to_string(i + 1) + " is larger than the declared maximum " +
                       std::to_string(max_bag));
  }
  td.canonicalize();
  return td;
}

/// Canonical form: sorted bag contents, `r` lines only for nonempty marked
/// sets, sorted tree edges. read_td(write_td(T)) == canonicalized T.
inline void write_td(std::ostream& out, const RefinedTreeDecomposition& td) {
  auto canon = td;
  canon.canonicalize();
  out << "s td " << canon.node_count() << ' ' << std::max(0, width(canon) + 1) << ' ' << canon.vertex_count << '\n';
  for (int t = 0; t < canon.node_count(); ++t) {
    out << "b " << t + 1;
    canon.bags[t].for_each([&](Vertex v) { out << ' ' << v + 1; });
    out << '\n';
  }
  for (int t = 0; t < canon.node_count(); ++t) {
    if (canon.refined[t].empty()) continue;
    out << "r " << t + 1;
    canon.refined[t].for_each([&](Vertex v) { out << ' ' << v + 1; });
    out << '\n';
  }
  for (auto [a, b] : canon.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

/// Members may list vertices in any order; they are sorted by incidence.
inline PackingInstance read_family(std::istream& in, int host_order) {
  detail::LineReader reader(in);
  detail::Line line;
  if (!reader.next(line)) throw ParseError("empty family file");
  if (line.tokens.size() != 3 || line.tokens[0] != "s" || line.tokens[1] != "fam")
    throw ParseError("expected header 's fam <count>'", line.number);
  long count = detail::parse_long(line.tokens[2], line.number);
  if (count < 0) throw ParseError("negative member count", line.number);

  std::vector<std::vector<Vertex>> lists(static_cast<std::size_t>(count));
  std::vector<Rational> weights(static_cast<std::size_t>(count));
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  while (reader.next(line)) {
    const auto& tok = line.tokens;
    if (tok[0] != "f" || tok.size() < 4) throw ParseError("expected 'f <id> <weight> <size> <vertices>'", line.number);
    int id = detail::parse_index(tok[1], count, line.number, "member id");
    if (seen[id]) throw ParseError("member " + std::to_string(id + 1) + " declared twice", line.number);
    seen[id] = 1;
    try {
      weights[id] = parse_rational(tok[2]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.number);
    }
    if (weights[id] < 0) throw ParseError("negative member weight", line.number);
    long size = detail::parse_long(tok[3], line.number);
    if (size < 1 || static_cast<std::size_t>(size) != tok.size() - 4)
      throw ParseError("member size does not match the listed vertices", line.number);
    for (std::size_t i = 4; i < tok.size(); ++i)
      lists[id].push_back(detail::parse_index(tok[i], host_order, line.number, "vertex"));
  }
  for (long i = 0; i < count; ++i)
    if (!seen[i]) throw ParseError("member " + std::to_string(i + 1) + " is never declared");

  PackingInstance inst;
  inst.family.host_order = host_order;
  for (auto& list : sort_sets_by_incidence(host_order, lists)) {
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) throw ParseError("member lists a vertex twice");
    inst.family.members.push_back(VertexSet::from_range(host_order, list));
  }
  inst.weights = std::move(weights);
  return inst;
}

inline void write_family(std::ostream& out, const PackingInstance& inst) {
  out << "s fam " << inst.family.size() << '\n';
  for (int j = 0; j < inst.family.size(); ++j) {
    const auto& m = inst.family.members[j];
    out << "f " << j + 1 << ' ' << format_rational(inst.weights.at(j)) << ' ' << m.size();
    m.for_each([&](Vertex v) { out << ' ' << v + 1; });
    out << '\n';
  }
}

inline VertexSet read_vertex_set(std::istream& in, int n) {
  VertexSet s(n);
  detail::LineReader reader(in);
  detail::Line line;
  while (reader.next(line))
    for (auto tok : line.tokens) s.insert(detail::parse_index(tok, n, line.number, "vertex"));
  return s;
}

template <typename Writer, typename Value>
std::string to_text(Writer&& write, const Value& value) {
  std::ostringstream s;
  write(s, value);
  return s.str();
}

} // namespace tin::io
