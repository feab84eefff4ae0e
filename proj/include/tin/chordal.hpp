#pragma once

#include <optional>
#include <vector>

#include "tin/decomposition.hpp"
#include "tin/graph.hpp"

namespace tin {

/// Maximum cardinality search visit order: repeatedly visit an unvisited
/// vertex with the most visited neighbours (ties to the smallest id).
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    visited[best] = 1;
    order.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }
  return order;
}

/// True iff `order` is a perfect elimination ordering: every vertex's
/// later neighbours form a clique.
inline bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  // Checking each later-neighbourhood against its earliest member suffices.
  for (Vertex v : order) {
    Vertex first = -1;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && (first < 0 || pos[u] < pos[first])) first = u;
    if (first < 0) continue;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && u != first && !g.adjacent(first, u)) return false;
  }
  return true;
}

struct ChordalityResult {
  bool chordal = false;
  /// When chordal: a perfect elimination ordering in elimination order, so
  /// peo[0] is simplicial in G and peo[i] is simplicial in G - {peo[0..i-1]}.
  /// This is the reverse of the search's visit order.
  std::optional<std::vector<Vertex>> peo;
};

/// The null graph counts as chordal.
inline ChordalityResult is_chordal(const Graph& g) {
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_ordering(g, order)) return {};
  return {true, std::move(order)};
}

/// Clique tree of a nonnull chordal graph: one bag per maximal clique,
/// all refined sets empty. Throws InvalidInput otherwise.
inline RefinedTreeDecomposition clique_tree(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("clique_tree needs a nonnull graph");
  auto result = is_chordal(g);
  if (!result.chordal) throw InvalidInput("clique_tree needs a chordal graph");
  return decomposition_from_elimination_order(g, *result.peo);
}

} // namespace tin
