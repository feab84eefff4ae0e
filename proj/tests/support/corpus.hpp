#pragma once

// Test-only graph corpora and brute-force oracles. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tin/tin.hpp"

namespace tin::testing {

/// Every labeled graph on n vertices; `visit` gets each one.
inline void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    visit(Graph(n, edges));
  }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Random weight p/q with p in [0, 20], q in [1, 6].
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 20), den(1, 6);
  int p = num(rng);
  return Rational(p, den(rng));
}

inline WeightMap random_weights(int n, std::mt19937_64& rng) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) w.push_back(random_rational(rng));
  return WeightMap(std::move(w));
}

inline std::vector<std::uint32_t> masks_of(const Graph& g) {
  std::vector<std::uint32_t> m(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    m[u] |= 1u << v;
    m[v] |= 1u << u;
  }
  return m;
}

inline bool mask_independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::uint32_t m = s; m; m &= m - 1)
    if (adj[std::countr_zero(m)] & s) return false;
  return true;
}

/// alpha by scanning all 2^n subsets.
inline int alpha_by_enumeration(const Graph& g) {
  auto adj = masks_of(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if (mask_independent(adj, s)) best = std::max(best, std::popcount(s));
  return best;
}

/// Max weight independent set value by scanning all 2^n subsets.
inline Rational mwis_by_enumeration(const Graph& g, const WeightMap& w) {
  auto adj = masks_of(g);
  Rational best = 0;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
    if (!mask_independent(adj, s)) continue;
    Rational total = 0;
    for (std::uint32_t m = s; m; m &= m - 1) total += w[std::countr_zero(m)];
    best = std::max(best, total);
  }
  return best;
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle
/// (connected with every induced degree equal to 2).
inline bool chordal_by_cycle_search(const Graph& g) {
  auto adj = masks_of(g);
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
    if (std::popcount(s) < 4) continue;
    bool all_two = true;
    for (std::uint32_t m = s; m && all_two; m &= m - 1) all_two = std::popcount(adj[std::countr_zero(m)] & s) == 2;
    if (!all_two) continue;
    std::uint32_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return false;
  }
  return true;
}

/// Random valid decomposition: a random elimination ordering, then random
/// leaves hanging off existing nodes with a random subset of the host bag,
/// then random edge subdivisions with the union of the two end bags.
inline RefinedTreeDecomposition random_decomposition(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  auto td = decomposition_from_elimination_order(g, order);
  std::uniform_int_distribution<int> extra(0, 3);
  std::bernoulli_distribution coin(0.5);
  for (int i = extra(rng); i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, td.node_count() - 1);
    Node host = pick(rng);
    VertexSet bag(g.order());
    td.bags[host].for_each([&](Vertex v) {
      if (coin(rng)) bag.insert(v);
    });
    Node leaf = td.add_node(std::move(bag));
    td.add_edge(host, leaf);
  }
  for (int i = extra(rng); i > 0 && !td.tree_edges.empty(); --i) {
    std::uniform_int_distribution<std::size_t> pick(0, td.tree_edges.size() - 1);
    std::size_t e = pick(rng);
    auto [a, b] = td.tree_edges[e];
    Node mid = td.add_node(td.bags[a] | td.bags[b]);
    td.tree_edges[e] = {a, mid};
    td.add_edge(mid, b);
  }
  return td;
}

/// Marks a random subset of each bag.
inline RefinedTreeDecomposition with_random_marks(RefinedTreeDecomposition td, std::mt19937_64& rng, double p = 0.3) {
  std::bernoulli_distribution coin(p);
  for (int t = 0; t < td.node_count(); ++t) {
    td.refined[t] = VertexSet(td.vertex_count);
    td.bags[t].for_each([&](Vertex v) {
      if (coin(rng)) td.refined[t].insert(v);
    });
  }
  return td;
}

/// Random connected subgraph vertex sets: random walks of length <= max_size.
inline SubgraphFamily random_family(const Graph& g, int members, int max_size, std::mt19937_64& rng) {
  SubgraphFamily f{g.order(), {}};
  std::uniform_int_distribution<int> start(0, g.order() - 1), len(1, max_size);
  for (int j = 0; j < members; ++j) {
    VertexSet s(g.order());
    Vertex v = start(rng);
    s.insert(v);
    int target = len(rng);
    for (int step = 0; step < 4 * target && s.size() < target; ++step) {
      if (g.degree(v) == 0) break;
      std::uniform_int_distribution<int> nb(0, g.degree(v) - 1);
      v = g.neighbors(v)[nb(rng)];
      s.insert(v);
    }
    f.members.push_back(std::move(s));
  }
  return f;
}

/// Clique sum: two random graphs glued along a common clique C. Returns the
/// graph and the partition (A, B, C).
struct CliqueSum {
  Graph graph;
  VertexSet a, b, c;
};

inline CliqueSum random_clique_sum(int size_a, int size_b, int size_c, double p, std::mt19937_64& rng) {
  const int n = size_a + size_b + size_c;
  // C occupies the lowest ids; then A, then B.
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  auto side = [&](Vertex v) { return v < size_c ? 0 : (v < size_c + size_a ? 1 : 2); };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int su = side(u), sv = side(v);
      if (su == 0 && sv == 0)
        edges.emplace_back(u, v);
      else if (su == 0 || sv == 0 || su == sv) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
  CliqueSum out{Graph(n, edges), VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) (side(v) == 0 ? out.c : side(v) == 1 ? out.a : out.b).insert(v);
  return out;
}

/// Line graph of g (vertices = g.edges() in order), built independently of the packing module.
inline Graph line_graph(const Graph& g) {
  auto e = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
          e[i].second == e[j].second)
        out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<int>(e.size()), out);
}

inline Graph square(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      bool near = g.adjacent(u, v);
      for (Vertex x : g.neighbors(u)) near = near || g.adjacent(x, v);
      if (near) out.emplace_back(u, v);
    }
  return Graph(g.order(), out);
}

/// Exhaustive packing optimum straight from the definition (disjoint, no edge between).
inline Rational packing_by_enumeration(const Graph& g, const PackingInstance& inst) {
  const int count = inst.family.size();
  Rational best = 0;
  for (std::uint32_t s = 0; s < (1u << count); ++s) {
    bool ok = true;
    Rational total = 0;
    for (int i = 0; i < count && ok; ++i) {
      if (!(s >> i & 1u)) continue;
      total += inst.weights[i];
      for (int j = i + 1; j < count && ok; ++j) {
        if (!(s >> j & 1u)) continue;
        const auto& a = inst.family.members[i];
        const auto& b = inst.family.members[j];
        if (a.intersects(b)) ok = false;
        a.for_each([&](Vertex u) {
          b.for_each([&](Vertex v) { ok = ok && !g.adjacent(u, v); });
        });
      }
    }
    if (ok) best = std::max(best, total);
  }
  return best;
}

} // namespace tin::testing
