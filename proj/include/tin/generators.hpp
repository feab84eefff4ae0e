#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tin/error.hpp"
#include "tin/graph.hpp"

namespace tin::gen {

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}
} // namespace detail

inline Graph edgeless(int n) {
  detail::require(n >= 0, "edgeless: n must be nonnegative");
  return Graph(n, std::span<const Edge>{});
}

inline Graph complete(int n) {
  detail::require(n >= 0, "complete: n must be nonnegative");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph path(int n) {
  detail::require(n >= 1, "path: n must be positive");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  detail::require(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

/// K_{m,n}: vertices 0..m-1 on one side, m..m+n-1 on the other.
inline Graph complete_bipartite(int m, int n) {
  detail::require(m >= 1 && n >= 1, "complete_bipartite: both sides must be nonempty");
  std::vector<Edge> e;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) e.emplace_back(u, m + v);
  return Graph(m + n, e);
}

/// K_{1,n} with centre 0.
inline Graph star(int leaves) {
  detail::require(leaves >= 1, "star: need at least one leaf");
  return complete_bipartite(1, leaves);
}

/// Two disjoint copies of h (ids v and v + |h|) with every cross edge added.
inline Graph double_join(const Graph& h) {
  const int n = h.order();
  std::vector<Edge> e;
  for (auto [u, v] : h.edges()) {
    e.emplace_back(u, v);
    e.emplace_back(n + u, n + v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) e.emplace_back(u, n + v);
  return Graph(2 * n, e);
}

/// K_k on hubs 0..k-1 with every hub edge ij replaced by k internally disjoint
/// paths of length two; the middle vertices follow the hubs, k per hub pair in
/// lexicographic pair order. k + k*k(k-1)/2 vertices, k*k(k-1) edges.
inline Graph sharpness(int k) {
  detail::require(k >= 3, "sharpness: k must be at least 3");
  std::vector<Edge> e;
  Vertex next = k;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j)
      for (int copy = 0; copy < k; ++copy) {
        e.emplace_back(i, next);
        e.emplace_back(next, j);
        ++next;
      }
  return Graph(next, e);
}

/// G(n, p) with a fixed seed; deterministic for a given standard library.
inline Graph random_gnp(int n, double p, std::uint64_t seed) {
  detail::require(n >= 0 && p >= 0.0 && p <= 1.0, "random: need n >= 0 and 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Dispatch for the integer-parameter kinds: complete n, path n, cycle n,
/// edgeless n, star n, knn n, complete-bipartite m n, sharpness k.
/// double-join and random take non-integer arguments and are called directly.
inline Graph generate(std::string_view kind, std::span<const long> params) {
  auto arity = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidInput("generator '" + std::string(kind) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
  if (kind == "complete") return arity(1), complete(p(0));
  if (kind == "path") return arity(1), path(p(0));
  if (kind == "cycle") return arity(1), cycle(p(0));
  if (kind == "edgeless") return arity(1), edgeless(p(0));
  if (kind == "star") return arity(1), star(p(0));
  if (kind == "knn") return arity(1), complete_bipartite(p(0), p(0));
  if (kind == "complete-bipartite" || kind == "complete_bipartite") return arity(2), complete_bipartite(p(0), p(1));
  if (kind == "sharpness") return arity(1), sharpness(p(0));
  throw InvalidInput("unknown generator '" + std::string(kind) + "'");
}

} // namespace tin::gen
