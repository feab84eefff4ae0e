#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tin/error.hpp"
#include "tin/rational.hpp"
#include "tin/vertex_set.hpp"

namespace tin {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Neighbor lists are strictly ascending. For n up to `matrix_cap` a bit-row
/// adjacency matrix is built as well, which gives constant-time adjacency tests
/// and word-parallel independence checks. Immutable after construction.
class Graph {
public:
  static constexpr int kDefaultMatrixCap = 4096;

  /// The null graph.
  Graph() = default;

  /// Duplicate pairs (in either orientation) collapse to one edge.
  /// Throws InvalidInput on a self-loop or an endpoint outside [0, n).
  Graph(int n, std::span<const Edge> edges, int matrix_cap = kDefaultMatrixCap) : adj_(check_order(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside [0," + std::to_string(n) + ")");
      if (u == v) throw InvalidInput("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      edge_count_ += list.size();
    }
    edge_count_ /= 2;
    if (n <= matrix_cap) {
      rows_.reserve(adj_.size());
      for (const auto& list : adj_) rows_.push_back(VertexSet::from_range(n, list));
    }
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_matrix() const noexcept { return !rows_.empty() || adj_.empty(); }

  /// Open neighborhood as a bit row. Built on the fly when no matrix is stored.
  VertexSet row(Vertex v) const {
    if (!rows_.empty()) return rows_.at(v);
    return VertexSet::from_range(order(), adj_.at(v));
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (!rows_.empty()) return rows_.at(u).contains(v);
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    for (const auto& list : adj_) d.push_back(static_cast<int>(list.size()));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
  static std::size_t check_order(int n) {
    if (n < 0) throw InvalidInput("negative vertex count");
    return static_cast<std::size_t>(n);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

/// Nonnegative exact per-vertex weights.
class WeightMap {
public:
  WeightMap() = default;

  explicit WeightMap(std::vector<Rational> weights) : w_(std::move(weights)) {
    for (std::size_t v = 0; v < w_.size(); ++v)
      if (w_[v] < 0) throw InvalidInput("negative weight on vertex " + std::to_string(v));
  }

  static WeightMap uniform(int n, const Rational& value = Rational(1)) {
    return WeightMap(std::vector<Rational>(static_cast<std::size_t>(n), value));
  }

  int size() const noexcept { return static_cast<int>(w_.size()); }
  const Rational& operator[](Vertex v) const { return w_.at(v); }

  Rational total(const VertexSet& s) const {
    Rational sum = 0;
    s.for_each([&](Vertex v) { sum += w_.at(v); });
    return sum;
  }

  const std::vector<Rational>& values() const noexcept { return w_; }

private:
  std::vector<Rational> w_;
};

struct InducedSubgraph {
  Graph graph;
  /// old id -> new id, or -1 for vertices outside the kept set.
  std::vector<Vertex> old_to_new;
  /// new id -> old id; ascending, so the relabeling preserves order.
  std::vector<Vertex> new_to_old;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order())
    throw InvalidInput("vertex set universe " + std::to_string(keep.universe()) +
                       " does not match graph order " + std::to_string(g.order()));
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  out.new_to_old = keep.members();
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) out.old_to_new[out.new_to_old[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : out.new_to_old)
    for (Vertex v : g.neighbors(u))
      if (u < v && out.old_to_new[v] >= 0) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

/// G - v, relabeled order-preservingly.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  VertexSet keep = VertexSet::full(g.order());
  keep.erase(v);
  return induced_subgraph(g, keep).graph;
}

/// Contracts the edge uv. The merged vertex takes id min(u, v); ids above
/// max(u, v) shift down by one. Parallel edges merge.
inline Graph contract_edge(const Graph& g, Edge e) {
  auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
    throw InvalidInput("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  Vertex keep = std::min(u, v), gone = std::max(u, v);
  auto relabel = [&](Vertex x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    Vertex ra = relabel(a), rb = relabel(b);
    if (ra != rb) edges.emplace_back(ra, rb);
  }
  return Graph(g.order() - 1, edges);
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InvalidInput("vertex set does not belong to this graph");
  bool ok = true;
  if (g.has_matrix()) {
    s.for_each([&](Vertex v) { ok = ok && !g.row(v).intersects(s); });
  } else {
    s.for_each([&](Vertex v) {
      for (Vertex u : g.neighbors(v)) ok = ok && !s.contains(u);
    });
  }
  return ok;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

inline bool is_connected(const Graph& g, const VertexSet& s) {
  Vertex start = s.first();
  if (start < 0) return true;
  VertexSet seen(g.order());
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (s.contains(u) && !seen.contains(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
  }
  return seen == s;
}

inline bool is_connected(const Graph& g) { return is_connected(g, VertexSet::full(g.order())); }

namespace detail {

// Branch and bound for a maximum clique with a greedy-colouring bound
// (Tomita-style). `rows` is the adjacency of the graph searched for cliques.
class CliqueSearch {
public:
  explicit CliqueSearch(const std::vector<VertexSet>& rows) : rows_(rows) {}

  int run(int n) {
    best_ = 0;
    if (n > 0) expand(VertexSet::full(n), 0);
    return best_;
  }

private:
  void expand(VertexSet candidates, int size) {
    std::vector<Vertex> order;
    std::vector<int> colour;
    greedy_colour(candidates, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      Vertex v = order[i];
      VertexSet next = candidates & rows_[v];
      if (next.empty())
        best_ = std::max(best_, size + 1);
      else
        expand(std::move(next), size + 1);
      candidates.erase(v);
    }
  }

  // Colour classes are independent sets, so a clique uses at most one vertex per class.
  void greedy_colour(const VertexSet& candidates, std::vector<Vertex>& order, std::vector<int>& colour) const {
    VertexSet uncoloured = candidates;
    int c = 0;
    while (!uncoloured.empty()) {
      ++c;
      VertexSet available = uncoloured;
      while (!available.empty()) {
        Vertex v = available.first();
        available.erase(v);
        available -= rows_[v];
        uncoloured.erase(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  const std::vector<VertexSet>& rows_;
  int best_ = 0;
};

inline void check_exact_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap)
    throw CapExceeded(std::string(what) + ": graph has " + std::to_string(g.order()) +
                      " vertices, exact cap is " + std::to_string(cap));
}

} // namespace detail

inline constexpr int kDefaultExactCap = 64;

/// Exact clique number. Null graph: 0.
inline int omega_exact(const Graph& g, int cap = kDefaultExactCap) {
  detail::check_exact_cap(g, cap, "omega_exact");
  std::vector<VertexSet> rows;
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.row(v));
  return detail::CliqueSearch(rows).run(g.order());
}

/// Exact independence number, as the clique number of the complement. Null graph: 0.
inline int alpha_exact(const Graph& g, int cap = kDefaultExactCap) {
  detail::check_exact_cap(g, cap, "alpha_exact");
  std::vector<VertexSet> rows;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet r = VertexSet::full(g.order()) - g.row(v);
    r.erase(v);
    rows.push_back(std::move(r));
  }
  return detail::CliqueSearch(rows).run(g.order());
}

/// Adjacency of a graph on at most 32 vertices as one 32-bit row per vertex.
inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.order() > 32) throw CapExceeded("adjacency_masks needs at most 32 vertices");
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) masks[v] |= std::uint32_t{1} << u;
  return masks;
}

/// Independence number of the subgraph induced by `mask` (graphs of order <= 32).
inline int alpha_of_mask(std::span<const std::uint32_t> adj, std::uint32_t mask) {
  if (mask == 0) return 0;
  Vertex pick = -1;
  int pick_deg = -1;
  for (std::uint32_t m = mask; m; m &= m - 1) {
    Vertex v = std::countr_zero(m);
    int d = std::popcount(adj[v] & mask);
    if (d <= 1) // some maximum independent set contains v
      return 1 + alpha_of_mask(adj, mask & ~((std::uint32_t{1} << v) | adj[v]));
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  std::uint32_t bit = std::uint32_t{1} << pick;
  return std::max(alpha_of_mask(adj, mask & ~bit), 1 + alpha_of_mask(adj, mask & ~(bit | adj[pick])));
}

} // namespace tin
