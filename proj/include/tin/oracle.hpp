#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <memory>
#include <thread>
#include <vector>

#include "tin/decomposition.hpp"
#include "tin/graph.hpp"
#include "tin/mwis.hpp"

// Exact tree-independence number and treewidth by dynamic programming over
// sets of eliminated vertices.
//
// Why elimination orderings suffice: take any tree decomposition T of G and
// let H join two vertices whenever they share a bag. H is chordal and every
// clique of H lies in a bag of T. Every chordal supergraph arises as the
// fill-in of some elimination ordering, and each elimination bag is a clique
// of H, so its alpha is at most the alpha of some bag of T. Hence the best
// ordering is never worse than T.

namespace tin {

inline constexpr int kOracleCap = 20;
inline constexpr int kOracleHardCap = 26;
inline constexpr int kBruteForceCap = 22;

/// v together with every vertex outside `eliminated` reachable from v by a
/// path whose internal vertices are all eliminated.
inline VertexSet elimination_bag(const Graph& g, Vertex v, const VertexSet& eliminated) {
  if (eliminated.contains(v)) throw InvalidInput("elimination_bag: v is already eliminated");
  VertexSet bag(g.order()), seen(g.order());
  std::vector<Vertex> stack{v};
  seen.insert(v);
  bag.insert(v);
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(x)) {
      if (seen.contains(u)) continue;
      seen.insert(u);
      if (eliminated.contains(u))
        stack.push_back(u);
      else
        bag.insert(u);
    }
  }
  return bag;
}

namespace detail {

using Mask = std::uint32_t;

inline Mask elimination_bag_mask(const std::vector<Mask>& adj, Vertex v, Mask eliminated) {
  Mask reach = adj[v];
  Mask frontier = adj[v] & eliminated;
  Mask component = 0;
  while (frontier) {
    component |= frontier;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    reach |= next;
    frontier = next & eliminated & ~component;
  }
  return (reach & ~eliminated) | (Mask{1} << v);
}

enum class Measure { IndependenceNumber, Width };

struct EliminationDp {
  std::vector<std::int8_t> cost;
  std::vector<std::int8_t> last; // vertex eliminated last in an optimal order of each set
};

// cost[S] = min over v in S of max(cost[S - v], measure(bag(v, S - v))).
inline EliminationDp run_elimination_dp(const Graph& g, Measure measure, int threads) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const std::size_t states = std::size_t{1} << n;
  EliminationDp dp{std::vector<std::int8_t>(states, 0), std::vector<std::int8_t>(states, -1)};
  dp.cost[0] = measure == Measure::Width ? -1 : 0;

  // alpha memo per bag mask; 0 = unknown, otherwise alpha + 1
  std::unique_ptr<std::atomic<std::int8_t>[]> alpha_memo;
  if (measure == Measure::IndependenceNumber) {
    alpha_memo.reset(new std::atomic<std::int8_t>[states]);
    for (std::size_t i = 0; i < states; ++i) alpha_memo[i].store(0, std::memory_order_relaxed);
  }
  auto bag_cost = [&](Mask bag) -> int {
    if (measure == Measure::Width) return std::popcount(bag) - 1;
    auto& slot = alpha_memo[bag];
    int cached = slot.load(std::memory_order_relaxed);
    if (cached) return cached - 1;
    int a = alpha_of_mask(adj, bag);
    slot.store(static_cast<std::int8_t>(a + 1), std::memory_order_relaxed);
    return a;
  };
  auto solve_state = [&](Mask s) {
    int best = 127;
    int best_v = -1;
    for (Mask m = s; m; m &= m - 1) {
      Vertex v = std::countr_zero(m);
      Mask before = s & ~(Mask{1} << v);
      int c = std::max<int>(dp.cost[before], bag_cost(elimination_bag_mask(adj, v, before)));
      if (c < best) {
        best = c;
        best_v = v;
      }
    }
    dp.cost[s] = static_cast<std::int8_t>(best);
    dp.last[s] = static_cast<std::int8_t>(best_v);
  };

  // States of one popcount layer depend only on the previous layer.
  std::vector<Mask> layer;
  for (int size = 1; size <= n; ++size) {
    layer.clear();
    Mask s = (Mask{1} << size) - 1;
    const Mask limit = static_cast<Mask>(states);
    while (s < limit) {
      layer.push_back(s);
      Mask c = s & (~s + 1), r = s + c; // next mask with the same popcount
      s = (((r ^ s) >> 2) / c) | r;
      if (r == 0) break;
    }
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(layer.size() / 256) + 1));
    if (workers == 1) {
      for (Mask m : layer) solve_state(m);
      continue;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < layer.size(); i += static_cast<std::size_t>(workers))
          solve_state(layer[i]);
      });
    for (auto& th : pool) th.join();
  }
  return dp;
}

inline void check_oracle_cap(const Graph& g, int cap, const char* what) {
  cap = std::min(cap, kOracleHardCap);
  if (g.order() > cap)
    throw CapExceeded(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                      std::to_string(cap));
}

inline std::vector<Vertex> optimal_order(const EliminationDp& dp, int n) {
  std::vector<Vertex> order;
  Mask s = n == 0 ? 0 : static_cast<Mask>((std::size_t{1} << n) - 1);
  while (s) {
    Vertex v = dp.last[s];
    order.push_back(v);
    s &= ~(Mask{1} << v);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

} // namespace detail

struct TinResult {
  int value = 0;
  /// Clique tree of the fill-in of `elimination_order`; attains `value`.
  RefinedTreeDecomposition witness;
  std::vector<Vertex> elimination_order;
};

/// Exact tree-independence number with a witness decomposition.
/// 2^n * n states; refuses graphs above `cap` (never more than kOracleHardCap).
inline TinResult tin_exact(const Graph& g, int cap = kOracleCap, int threads = 1) {
  detail::check_oracle_cap(g, cap, "tin_exact");
  auto dp = detail::run_elimination_dp(g, detail::Measure::IndependenceNumber, threads);
  TinResult r;
  r.value = dp.cost.back();
  r.elimination_order = detail::optimal_order(dp, g.order());
  r.witness = decomposition_from_elimination_order(g, r.elimination_order);
  return r;
}

/// Exact treewidth; -1 for the null graph.
inline int treewidth_exact(const Graph& g, int cap = kOracleCap, int threads = 1) {
  detail::check_oracle_cap(g, cap, "treewidth_exact");
  return detail::run_elimination_dp(g, detail::Measure::Width, threads).cost.back();
}

/// Exhaustive maximum weight independent set, pruned by the remaining weight.
inline MwisResult brute_force_mwis(const Graph& g, const WeightMap& w, int cap = kBruteForceCap) {
  if (g.order() > std::min(cap, 32))
    throw CapExceeded("brute_force_mwis: " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                      std::to_string(cap));
  if (w.size() != g.order()) throw InvalidInput("weight map size does not match the graph");
  using detail::Mask;
  const auto adj = adjacency_masks(g);
  Rational best = 0;
  Mask best_set = 0;
  Rational current = 0;
  auto rec = [&](auto&& self, Mask candidates, Mask chosen) -> void {
    if (current > best) {
      best = current;
      best_set = chosen;
    }
    if (!candidates) return;
    Rational bound = current;
    for (Mask m = candidates; m; m &= m - 1) bound += w[std::countr_zero(m)];
    if (bound <= best) return;
    Vertex v = std::countr_zero(candidates);
    Mask bit = Mask{1} << v;
    current += w[v];
    self(self, candidates & ~bit & ~adj[v], chosen | bit);
    current -= w[v];
    self(self, candidates & ~bit, chosen);
  };
  Mask all = g.order() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
  rec(rec, all, 0);
  VertexSet set(g.order());
  for (Mask m = best_set; m; m &= m - 1) set.insert(std::countr_zero(m));
  return {best, set};
}

} // namespace tin
