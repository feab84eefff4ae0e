#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tin/error.hpp"
#include "tin/graph.hpp"
#include "tin/vertex_set.hpp"

namespace tin {

using Node = int;

/// Tree decomposition in which every node t carries a bag X_t and a marked
/// subset U_t of X_t. A plain tree decomposition has every U_t empty.
///
/// Construction does not check anything; call validate().
/// The refinement parameter is derived as max |U_t|, it is not stored.
struct RefinedTreeDecomposition {
  /// Order of the decomposed graph; every bag is a set over 0..vertex_count-1.
  int vertex_count = 0;
  std::vector<std::pair<Node, Node>> tree_edges;
  std::vector<VertexSet> bags;
  std::vector<VertexSet> refined;

  RefinedTreeDecomposition() = default;
  explicit RefinedTreeDecomposition(int n) : vertex_count(n) {}

  int node_count() const noexcept { return static_cast<int>(bags.size()); }

  Node add_node(VertexSet bag) { return add_node(std::move(bag), VertexSet(vertex_count)); }
  Node add_node(VertexSet bag, VertexSet marked) {
    bags.push_back(std::move(bag));
    refined.push_back(std::move(marked));
    return node_count() - 1;
  }
  void add_edge(Node a, Node b) { tree_edges.emplace_back(a, b); }

  int refinement() const {
    int l = 0;
    for (const auto& u : refined) l = std::max(l, u.size());
    return l;
  }

  /// Tree edges as (min, max), sorted. Bags are already canonical.
  void canonicalize() {
    for (auto& [a, b] : tree_edges)
      if (a > b) std::swap(a, b);
    std::sort(tree_edges.begin(), tree_edges.end());
  }

  std::vector<std::vector<Node>> adjacency() const {
    std::vector<std::vector<Node>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
      adj.at(a).push_back(b);
      adj.at(b).push_back(a);
    }
    return adj;
  }

  friend bool operator==(const RefinedTreeDecomposition&, const RefinedTreeDecomposition&) = default;
};

enum class Clause {
  NotATree,
  BagOutOfRange,
  RefinedNotInBag,
  VertexUncovered,
  EdgeUncovered,
  SubtreeDisconnected,
};

inline const char* clause_name(Clause c) {
  switch (c) {
  case Clause::NotATree: return "not-a-tree";
  case Clause::BagOutOfRange: return "bag-out-of-range";
  case Clause::RefinedNotInBag: return "refined-not-in-bag";
  case Clause::VertexUncovered: return "vertex-uncovered";
  case Clause::EdgeUncovered: return "edge-uncovered";
  case Clause::SubtreeDisconnected: return "subtree-disconnected";
  }
  return "unknown";
}

struct Violation {
  Clause clause;
  std::string witness;
};

/// Result of validate(); at most one violation (the first witness) per clause.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Clause c) const {
    return std::any_of(violations.begin(), violations.end(), [c](const Violation& v) { return v.clause == c; });
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) s += std::string(clause_name(v.clause)) + ": " + v.witness + "\n";
    return s;
  }
};

/// Checks tree-ness, U_t within X_t, vertex coverage, edge coverage and that
/// each vertex's bags induce a subtree. Vertex and node ids in witnesses are
/// shifted by `offset` (1 for file-facing messages).
inline ValidationReport validate(const Graph& g, const RefinedTreeDecomposition& td, int offset = 0) {
  ValidationReport report;
  auto id = [offset](int x) { return std::to_string(x + offset); };
  auto fail = [&](Clause c, std::string w) { report.violations.push_back({c, std::move(w)}); };
  const int nodes = td.node_count();

  bool tree_ok = true;
  if (td.refined.size() != td.bags.size()) {
    fail(Clause::NotATree, "bag and refined-set counts differ");
    return report;
  }
  if (nodes == 0) {
    fail(Clause::NotATree, "decomposition has no nodes");
    tree_ok = false;
  } else if (td.tree_edges.size() != static_cast<std::size_t>(nodes - 1)) {
    fail(Clause::NotATree, std::to_string(td.tree_edges.size()) + " tree edges on " + std::to_string(nodes) + " nodes");
    tree_ok = false;
  } else {
    for (auto [a, b] : td.tree_edges)
      if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
        fail(Clause::NotATree, "bad tree edge (" + id(a) + "," + id(b) + ")");
        tree_ok = false;
        break;
      }
    if (tree_ok) {
      auto adj = td.adjacency();
      std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
      std::vector<Node> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        Node t = stack.back();
        stack.pop_back();
        for (Node s : adj[t])
          if (!seen[s]) {
            seen[s] = 1;
            ++reached;
            stack.push_back(s);
          }
      }
      if (reached != nodes) {
        Node lost = static_cast<Node>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
        fail(Clause::NotATree, "node " + id(lost) + " unreachable from node " + id(0));
        tree_ok = false;
      }
    }
  }

  for (Node t = 0; t < nodes; ++t)
    if (td.bags[t].universe() != g.order() || td.refined[t].universe() != g.order()) {
      fail(Clause::BagOutOfRange, "node " + id(t) + " is over a universe of " +
                                      std::to_string(td.bags[t].universe()) + " vertices, graph has " +
                                      std::to_string(g.order()));
      return report;
    }

  for (Node t = 0; t < nodes; ++t)
    if (!td.refined[t].is_subset_of(td.bags[t])) {
      Vertex v = (td.refined[t] - td.bags[t]).first();
      fail(Clause::RefinedNotInBag, "vertex " + id(v) + " marked at node " + id(t) +
                                        " but not in its bag");
      break;
    }

  VertexSet covered(g.order());
  for (const auto& b : td.bags) covered |= b;
  if (Vertex v = (VertexSet::full(g.order()) - covered).first(); v >= 0)
    fail(Clause::VertexUncovered, "vertex " + id(v) + " is in no bag");

  for (auto [u, v] : g.edges()) {
    bool inside = std::any_of(td.bags.begin(), td.bags.end(),
                              [&](const VertexSet& b) { return b.contains(u) && b.contains(v); });
    if (!inside) {
      fail(Clause::EdgeUncovered, "edge (" + id(u) + "," + id(v) + ") is in no bag");
      break;
    }
  }

  if (tree_ok) {
    auto adj = td.adjacency();
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<Node> holders;
      for (Node t = 0; t < nodes; ++t)
        if (td.bags[t].contains(v)) holders.push_back(t);
      if (holders.size() < 2) continue;
      std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
      std::vector<Node> stack{holders.front()};
      seen[holders.front()] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        Node t = stack.back();
        stack.pop_back();
        for (Node s : adj[t])
          if (!seen[s] && td.bags[s].contains(v)) {
            seen[s] = 1;
            ++reached;
            stack.push_back(s);
          }
      }
      if (reached != holders.size()) {
        fail(Clause::SubtreeDisconnected, "nodes holding vertex " + id(v) + " are disconnected");
        break;
      }
    }
  }
  return report;
}

inline void require_valid(const Graph& g, const RefinedTreeDecomposition& td) {
  auto report = validate(g, td);
  if (!report.ok()) throw InvalidDecomposition("invalid tree decomposition: " + report.summary());
}

/// max |X_t| - 1; a decomposition whose bags are all empty has width -1.
inline int width(const RefinedTreeDecomposition& td) {
  int w = -1;
  for (const auto& b : td.bags) w = std::max(w, b.size() - 1);
  return w;
}

namespace detail {
inline int bag_alpha(const Graph& g, const VertexSet& bag, int cap) {
  if (bag.size() > cap)
    throw CapExceeded("bag of size " + std::to_string(bag.size()) + " exceeds the exact alpha cap " +
                      std::to_string(cap));
  return alpha_exact(induced_subgraph(g, bag).graph, cap);
}
} // namespace detail

/// max over bags of alpha(G[X_t]).
inline int independence_number(const Graph& g, const RefinedTreeDecomposition& td, int cap = kDefaultExactCap) {
  int a = 0;
  for (const auto& b : td.bags) a = std::max(a, detail::bag_alpha(g, b, cap));
  return a;
}

/// max over bags of alpha(G[X_t \ U_t]).
inline int residual_independence_number(const Graph& g, const RefinedTreeDecomposition& td,
                                        int cap = kDefaultExactCap) {
  int a = 0;
  for (int t = 0; t < td.node_count(); ++t) a = std::max(a, detail::bag_alpha(g, td.bags[t] - td.refined[t], cap));
  return a;
}

/// One node whose bag is V(G). The null graph gets a single empty bag.
inline RefinedTreeDecomposition trivial_decomposition(const Graph& g) {
  RefinedTreeDecomposition td(g.order());
  td.add_node(VertexSet::full(g.order()));
  return td;
}

/// Contracts every tree edge whose endpoint bags are comparable, keeping the
/// (X, U) pair of the larger bag, until no two adjacent bags are comparable.
/// Surviving nodes keep their relative order.
inline RefinedTreeDecomposition contract_comparable_bags(const RefinedTreeDecomposition& td) {
  const int nodes = td.node_count();
  std::vector<std::set<Node>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : td.tree_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> alive(static_cast<std::size_t>(nodes), 1);

  bool changed = true;
  while (changed) {
    changed = false;
    for (Node a = 0; a < nodes; ++a) {
      if (!alive[a]) continue;
      for (Node b : adj[a]) {
        Node drop = -1, keep = -1;
        if (td.bags[a].is_subset_of(td.bags[b])) {
          drop = a;
          keep = b;
        } else if (td.bags[b].is_subset_of(td.bags[a])) {
          drop = b;
          keep = a;
        }
        if (drop < 0) continue;
        for (Node x : adj[drop]) {
          adj[x].erase(drop);
          if (x != keep) {
            adj[x].insert(keep);
            adj[keep].insert(x);
          }
        }
        adj[drop].clear();
        alive[drop] = 0;
        changed = true;
        break;
      }
    }
  }

  std::vector<Node> id(static_cast<std::size_t>(nodes), -1);
  RefinedTreeDecomposition out(td.vertex_count);
  for (Node t = 0; t < nodes; ++t)
    if (alive[t]) id[t] = out.add_node(td.bags[t], td.refined[t]);
  for (Node t = 0; t < nodes; ++t)
    for (Node s : adj[t])
      if (alive[t] && t < s) out.add_edge(id[t], id[s]);
  out.canonicalize();
  return out;
}

/// Decomposition induced by an elimination ordering (`order[0]` eliminated
/// first). The bag of order[i] is order[i] plus its neighbours in the fill-in
/// graph that are eliminated later; each bag hangs below the bag of its
/// earliest-eliminated other member. Components are chained together at their
/// roots. Comparable adjacent bags are then contracted, so for a chordal graph
/// and a perfect elimination ordering the result is a clique tree.
inline RefinedTreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw InvalidInput("elimination ordering must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw InvalidInput("elimination ordering must list every vertex once");
    pos[v] = i;
  }
  if (n == 0) return trivial_decomposition(g);

  std::vector<VertexSet> fill;
  for (Vertex v = 0; v < n; ++v) fill.push_back(g.row(v));
  VertexSet remaining = VertexSet::full(n);

  RefinedTreeDecomposition td(n);
  std::vector<Node> parent_vertex(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    remaining.erase(v);
    VertexSet later = fill[v] & remaining;
    later.for_each([&](Vertex a) {
      fill[a] |= later;
      fill[a].erase(a);
    });
    VertexSet bag = later;
    bag.insert(v);
    td.add_node(std::move(bag));
    Vertex next = -1;
    later.for_each([&](Vertex u) {
      if (next < 0 || pos[u] < pos[next]) next = u;
    });
    parent_vertex[i] = next;
  }
  Node previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent_vertex[i] >= 0) {
      td.add_edge(i, pos[parent_vertex[i]]);
    } else {
      if (previous_root >= 0) td.add_edge(previous_root, i);
      previous_root = i;
    }
  }
  return contract_comparable_bags(td);
}

/// Glues decompositions of G[A+C] and G[B+C] along a clique cutset C.
///
/// `part_a` and `part_b` use the order-preserving ids of induced_subgraph().
/// A bag containing C exists in each part whenever the part is valid; the two
/// trees are joined by one edge between such bags. Refined sets carry over, so
/// both the independence number and the residual one are the max of the parts.
inline RefinedTreeDecomposition compose_clique_cutset(const Graph& g, const VertexSet& a, const VertexSet& b,
                                                      const VertexSet& c, const RefinedTreeDecomposition& part_a,
                                                      const RefinedTreeDecomposition& part_b) {
  const int n = g.order();
  for (const VertexSet* s : {&a, &b, &c})
    if (s->universe() != n) throw InvalidInput("cut-partition sets must be over the graph's vertices");
  if (a.empty() || b.empty()) throw InvalidInput("cut-partition needs nonempty A and B");
  if (a.intersects(b) || a.intersects(c) || b.intersects(c) || (a | b | c) != VertexSet::full(n))
    throw InvalidInput("A, B, C must partition the vertex set");
  for (auto [u, v] : g.edges())
    if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u)))
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins A and B");
  if (!is_clique(g, c)) throw InvalidInput("C is not a clique");

  RefinedTreeDecomposition out(n);
  Node anchor[2] = {-1, -1};
  const RefinedTreeDecomposition* parts[2] = {&part_a, &part_b};
  const VertexSet* sides[2] = {&a, &b};
  for (int side = 0; side < 2; ++side) {
    auto sub = induced_subgraph(g, *sides[side] | c);
    const auto& part = *parts[side];
    auto report = validate(sub.graph, part);
    if (!report.ok())
      throw InvalidDecomposition(std::string("decomposition of side ") + (side == 0 ? "A" : "B") +
                                 " is invalid: " + report.summary());
    VertexSet c_local(sub.graph.order());
    c.for_each([&](Vertex v) { c_local.insert(sub.old_to_new[v]); });
    auto lift = [&](const VertexSet& s) {
      VertexSet r(n);
      s.for_each([&](Vertex v) { r.insert(sub.new_to_old[v]); });
      return r;
    };
    Node offset = out.node_count();
    for (Node t = 0; t < part.node_count(); ++t) {
      out.add_node(lift(part.bags[t]), lift(part.refined[t]));
      if (anchor[side] < 0 && c_local.is_subset_of(part.bags[t])) anchor[side] = offset + t;
    }
    for (auto [x, y] : part.tree_edges) out.add_edge(offset + x, offset + y);
    if (anchor[side] < 0)
      throw InvalidDecomposition(std::string("no bag of side ") + (side == 0 ? "A" : "B") + " contains C");
  }
  out.add_edge(anchor[0], anchor[1]);
  out.canonicalize();
  return out;
}

} // namespace tin
