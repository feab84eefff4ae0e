#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tin/decomposition.hpp"
#include "tin/generators.hpp"
#include "tin/graph.hpp"
#include "tin/mwis.hpp"
#include "tin/rational.hpp"

namespace tin {

/// Indexed family {H_j} of connected nonnull subgraphs of a host graph,
/// each represented by its vertex set.
///
/// Two members with the same vertex set are true twins in the derived graph,
/// so the enumerators keep one member per vertex set. Weights that depend on
/// more than the vertex set must be folded into one maximum per set first.
struct SubgraphFamily {
  int host_order = 0;
  std::vector<VertexSet> members;

  int size() const noexcept { return static_cast<int>(members.size()); }
};

struct PackingInstance {
  SubgraphFamily family;
  std::vector<Rational> weights;
};

struct PackingResult {
  Rational weight;
  /// Selected member indices, ascending.
  std::vector<int> selected;
};

inline constexpr int kPatternCap = 5;
inline constexpr int kBlobCap = 12;
inline constexpr int kBruteForcePackingCap = 22;

inline void check_family(const Graph& g, const SubgraphFamily& family) {
  if (family.host_order != g.order())
    throw InvalidInput("family was built for a host with " + std::to_string(family.host_order) +
                       " vertices, graph has " + std::to_string(g.order()));
  for (int j = 0; j < family.size(); ++j) {
    const auto& m = family.members[j];
    if (m.universe() != g.order()) throw InvalidInput("member " + std::to_string(j) + " is over the wrong universe");
    if (m.empty()) throw InvalidInput("member " + std::to_string(j) + " is empty");
    if (!is_connected(g, m)) throw InvalidInput("member " + std::to_string(j) + " does not induce a connected subgraph");
  }
}

inline SubgraphFamily make_family(const Graph& g, std::vector<VertexSet> members) {
  SubgraphFamily f{g.order(), std::move(members)};
  check_family(g, f);
  return f;
}

inline void check_instance(const Graph& g, const PackingInstance& inst) {
  check_family(g, inst.family);
  if (inst.weights.size() != inst.family.members.size()) throw InvalidInput("one weight per family member required");
  for (const auto& w : inst.weights)
    if (w < 0) throw InvalidInput("negative member weight");
}

/// Sorts every list w.r.t. the ground order 0..ground-1 in
/// O(ground + lists + total size) by two passes over the incidence lists.
inline std::vector<std::vector<Vertex>> sort_sets_by_incidence(int ground, const std::vector<std::vector<Vertex>>& lists) {
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(ground));
  for (std::size_t i = 0; i < lists.size(); ++i)
    for (Vertex v : lists[i]) {
      if (v < 0 || v >= ground) throw InvalidInput("element " + std::to_string(v) + " outside the ground set");
      holders[v].push_back(static_cast<int>(i));
    }
  std::vector<std::vector<Vertex>> sorted(lists.size());
  for (Vertex v = 0; v < ground; ++v)
    for (int i : holders[v]) sorted[i].push_back(v);
  return sorted;
}

namespace detail {
inline bool sorted_intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}
} // namespace detail

/// G(H): members i and j are adjacent when they share a vertex or a G-edge
/// joins them. For each j a BFS to depth two from a virtual vertex attached
/// to H_j yields the reach set R_j = H_j + N(H_j); then i ~ j iff the sorted
/// lists of H_i and R_j intersect.
inline Graph derived_graph(const Graph& g, const SubgraphFamily& family) {
  check_family(g, family);
  const int n = g.order();
  const int count = family.size();
  std::vector<std::vector<Vertex>> lists;
  for (const auto& m : family.members) lists.push_back(m.members());
  lists = sort_sets_by_incidence(n, lists);

  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  std::vector<Vertex> reach;
  for (int j = 0; j < count; ++j) {
    std::fill(mark.begin(), mark.end(), 0);
    for (Vertex v : lists[j]) mark[v] = 1; // depth one
    for (Vertex v : lists[j])
      for (Vertex u : g.neighbors(v)) mark[u] = 1; // depth two
    reach.clear();
    for (Vertex v = 0; v < n; ++v)
      if (mark[v]) reach.push_back(v);
    for (int i = j + 1; i < count; ++i)
      if (detail::sorted_intersect(lists[i], reach)) edges.emplace_back(j, i);
  }
  return Graph(count, edges);
}

/// Direct pairwise definition of G(H); reference for derived_graph().
inline Graph derived_graph_naive(const Graph& g, const SubgraphFamily& family) {
  check_family(g, family);
  std::vector<VertexSet> closed;
  for (const auto& m : family.members) {
    VertexSet c = m;
    m.for_each([&](Vertex v) { c |= g.row(v); });
    closed.push_back(std::move(c));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < family.size(); ++i)
    for (int j = i + 1; j < family.size(); ++j)
      if (closed[i].intersects(family.members[j])) edges.emplace_back(i, j);
  return Graph(family.size(), edges);
}

/// Same tree, bag X'_t = {j : H_j meets X_t}; all refined sets empty.
/// Valid for G(H) with alpha(T') <= alpha(T).
inline RefinedTreeDecomposition derived_decomposition(const Graph& g, const SubgraphFamily& family,
                                                      const RefinedTreeDecomposition& td) {
  check_family(g, family);
  require_valid(g, td);
  RefinedTreeDecomposition out(family.size());
  for (const auto& bag : td.bags) {
    VertexSet b(family.size());
    for (int j = 0; j < family.size(); ++j)
      if (family.members[j].intersects(bag)) b.insert(j);
    out.add_node(std::move(b));
  }
  out.tree_edges = td.tree_edges;
  return out;
}

/// True when the members are pairwise disjoint with no G-edge between them.
inline bool is_independent_packing(const Graph& g, const SubgraphFamily& family, const std::vector<int>& chosen) {
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    const auto& x = family.members.at(chosen[a]);
    VertexSet closed = x;
    x.for_each([&](Vertex v) { closed |= g.row(v); });
    for (std::size_t b = a + 1; b < chosen.size(); ++b)
      if (closed.intersects(family.members.at(chosen[b]))) return false;
  }
  return true;
}

/// Max Weight Independent Packing via MWIS on G(H) over the transferred
/// decomposition, which has independence number at most alpha(T) <= k.
/// Refined sets of `td` are not carried over.
inline PackingResult solve_packing(const Graph& g, const PackingInstance& inst, const RefinedTreeDecomposition& td,
                                   int k) {
  check_instance(g, inst);
  Graph dg = derived_graph(g, inst.family);
  RefinedTreeDecomposition dtd = derived_decomposition(g, inst.family, td);
  auto mwis = solve_mwis_plain(dg, WeightMap(inst.weights), dtd, k);
  PackingResult r{mwis.weight, mwis.set.members()};
  if (!is_independent_packing(g, inst.family, r.selected))
    throw std::logic_error("packing solver selected conflicting members");
  return r;
}

/// Exhaustive optimum over subfamilies; compatibility is tested pairwise from scratch.
inline PackingResult brute_force_packing(const Graph& g, const PackingInstance& inst, int cap = kBruteForcePackingCap) {
  check_instance(g, inst);
  const int count = inst.family.size();
  if (count > std::min(cap, 32))
    throw CapExceeded("brute_force_packing: " + std::to_string(count) + " members exceeds the cap of " +
                      std::to_string(cap));
  std::vector<std::uint32_t> conflict(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      const auto& a = inst.family.members[i];
      const auto& b = inst.family.members[j];
      bool clash = a.intersects(b);
      a.for_each([&](Vertex u) {
        b.for_each([&](Vertex v) { clash = clash || g.adjacent(u, v); });
      });
      if (clash) {
        conflict[i] |= std::uint32_t{1} << j;
        conflict[j] |= std::uint32_t{1} << i;
      }
    }
  Rational best = 0, current = 0;
  std::uint32_t best_set = 0;
  auto rec = [&](auto&& self, std::uint32_t open, std::uint32_t chosen) -> void {
    if (current > best) {
      best = current;
      best_set = chosen;
    }
    if (!open) return;
    Rational bound = current;
    for (std::uint32_t m = open; m; m &= m - 1) bound += inst.weights[std::countr_zero(m)];
    if (bound <= best) return;
    int j = std::countr_zero(open);
    std::uint32_t bit = std::uint32_t{1} << j;
    current += inst.weights[j];
    self(self, open & ~bit & ~conflict[j], chosen | bit);
    current -= inst.weights[j];
    self(self, open & ~bit, chosen);
  };
  std::uint32_t all = count == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << count) - 1);
  rec(rec, all, 0);
  PackingResult r{best, {}};
  for (std::uint32_t m = best_set; m; m &= m - 1) r.selected.push_back(std::countr_zero(m));
  return r;
}

// ---------------------------------------------------------------------------
// Pattern families

/// k1, k2, p3, k3, p4, c4, k13 (claw), paw, diamond, k4, p5, c5, k5.
inline Graph named_pattern(std::string_view name) {
  if (name == "k1") return gen::complete(1);
  if (name == "k2") return gen::complete(2);
  if (name == "p3") return gen::path(3);
  if (name == "k3") return gen::complete(3);
  if (name == "p4") return gen::path(4);
  if (name == "c4") return gen::cycle(4);
  if (name == "k13" || name == "claw") return gen::star(3);
  if (name == "paw") return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  if (name == "diamond") return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "k4") return gen::complete(4);
  if (name == "p5") return gen::path(5);
  if (name == "c5") return gen::cycle(5);
  if (name == "k5") return gen::complete(5);
  throw InvalidInput("unknown pattern '" + std::string(name) + "'");
}

namespace detail {

inline bool family_order(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

// Does some bijection pattern -> set map every pattern edge onto a G-edge?
inline bool has_spanning_copy(const Graph& g, const std::vector<Vertex>& set, const Graph& pattern) {
  if (pattern.order() != static_cast<int>(set.size())) return false;
  std::vector<Vertex> image = set;
  const auto pattern_edges = pattern.edges();
  do {
    bool ok = std::all_of(pattern_edges.begin(), pattern_edges.end(),
                          [&](const Edge& e) { return g.adjacent(image[e.first], image[e.second]); });
    if (ok) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

} // namespace detail

/// Vertex sets of size 1..max_size inducing a connected subgraph, ordered by
/// size then lexicographically.
inline std::vector<VertexSet> connected_sets(const Graph& g, int max_size) {
  std::set<VertexSet> seen;
  std::vector<VertexSet> level, out;
  for (Vertex v = 0; v < g.order() && max_size >= 1; ++v) level.push_back(VertexSet(g.order(), {v}));
  for (int size = 1; size <= max_size && !level.empty(); ++size) {
    std::vector<VertexSet> next;
    for (const auto& s : level) {
      out.push_back(s);
      if (size == max_size) continue;
      VertexSet frontier(g.order());
      s.for_each([&](Vertex v) { frontier |= g.row(v); });
      frontier -= s;
      frontier.for_each([&](Vertex u) {
        VertexSet bigger = s;
        bigger.insert(u);
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      });
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), detail::family_order);
  return out;
}

/// H(G, F) with one member per vertex set S (|S| <= max pattern order) such
/// that G[S] has a spanning subgraph isomorphic to a pattern.
inline SubgraphFamily enumerate_pattern_subgraphs(const Graph& g, const std::vector<Graph>& patterns,
                                                  int cap = kPatternCap) {
  int r = 0;
  for (const auto& p : patterns) {
    if (p.order() == 0) throw InvalidInput("patterns must be nonnull");
    if (!is_connected(p)) throw InvalidInput("patterns must be connected");
    if (p.order() > cap)
      throw CapExceeded("pattern of order " + std::to_string(p.order()) + " exceeds the cap of " + std::to_string(cap));
    r = std::max(r, p.order());
  }
  SubgraphFamily family{g.order(), {}};
  for (auto& s : connected_sets(g, r)) {
    auto members = s.members();
    bool hit = std::any_of(patterns.begin(), patterns.end(),
                           [&](const Graph& p) { return detail::has_spanning_copy(g, members, p); });
    if (hit) family.members.push_back(std::move(s));
  }
  return family;
}

/// Every connected induced subgraph, i.e. the family whose derived graph is the blob graph.
inline SubgraphFamily blob_family(const Graph& g, int cap = kBlobCap) {
  if (g.order() > cap)
    throw CapExceeded("blob_family: " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                      std::to_string(cap));
  return SubgraphFamily{g.order(), connected_sets(g, g.order())};
}

struct FrontEndResult {
  PackingInstance instance;
  PackingResult result;
};

/// Max Weight Induced Matching: F = {K2}. `edge_weights` follows g.edges();
/// empty means unit weights.
inline FrontEndResult induced_matching(const Graph& g, std::span<const Rational> edge_weights,
                                       const RefinedTreeDecomposition& td, int k) {
  const auto edges = g.edges();
  if (!edge_weights.empty() && edge_weights.size() != edges.size())
    throw InvalidInput("one weight per edge required");
  FrontEndResult out;
  out.instance.family.host_order = g.order();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.instance.family.members.push_back(VertexSet(g.order(), {edges[i].first, edges[i].second}));
    out.instance.weights.push_back(edge_weights.empty() ? Rational(1) : edge_weights[i]);
  }
  out.result = solve_packing(g, out.instance, td, k);
  return out;
}

/// Dissociation set: F = {K1, K2}, each member weighted by its order.
inline FrontEndResult dissociation_set(const Graph& g, const RefinedTreeDecomposition& td, int k) {
  FrontEndResult out;
  out.instance.family = enumerate_pattern_subgraphs(g, {named_pattern("k1"), named_pattern("k2")});
  for (const auto& m : out.instance.family.members) out.instance.weights.emplace_back(m.size());
  out.result = solve_packing(g, out.instance, td, k);
  return out;
}

/// Packing side of k-Separator with component order at most s: members are
/// the connected sets of order <= s weighted by their vertex weight. The
/// optimum is the heaviest vertex set whose induced components all have at
/// most s vertices; the separator is its complement.
inline FrontEndResult k_separator(const Graph& g, const WeightMap& w, int s, const RefinedTreeDecomposition& td,
                                  int k) {
  if (s < 1) throw InvalidInput("component order bound s must be positive");
  if (s > kPatternCap)
    throw CapExceeded("component order bound " + std::to_string(s) + " exceeds the pattern cap " +
                      std::to_string(kPatternCap));
  if (w.size() != g.order()) throw InvalidInput("weight map size does not match the graph");
  FrontEndResult out;
  out.instance.family = SubgraphFamily{g.order(), connected_sets(g, s)};
  for (const auto& m : out.instance.family.members) out.instance.weights.push_back(w.total(m));
  out.result = solve_packing(g, out.instance, td, k);
  return out;
}

} // namespace tin
