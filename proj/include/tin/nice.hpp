#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tin/decomposition.hpp"

namespace tin {

enum class NodeType { Leaf, Introduce, Forget, Join };

inline const char* node_type_name(NodeType t) {
  switch (t) {
  case NodeType::Leaf: return "leaf";
  case NodeType::Introduce: return "introduce";
  case NodeType::Forget: return "forget";
  case NodeType::Join: return "join";
  }
  return "unknown";
}

struct NiceNodeKind {
  NodeType type = NodeType::Leaf;
  /// Introduced or forgotten vertex; -1 for leaves and joins.
  Vertex vertex = -1;
};

/// Rooted refined decomposition whose root and leaves have empty bags and
/// whose other nodes are introduce, forget or join nodes. Node 0 is the root
/// and ids follow a preorder walk.
struct NiceRefinedTreeDecomposition {
  RefinedTreeDecomposition decomposition;
  Node root = 0;
  std::vector<Node> parent;
  std::vector<std::vector<Node>> children;
  std::vector<NiceNodeKind> kinds;

  int node_count() const noexcept { return decomposition.node_count(); }

  /// Children before parents.
  std::vector<Node> postorder() const {
    std::vector<Node> order, stack{root};
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      order.push_back(t);
      for (Node c : children[t]) stack.push_back(c);
    }
    return {order.rbegin(), order.rend()};
  }

  int count(NodeType type) const {
    int c = 0;
    for (const auto& k : kinds) c += k.type == type;
    return c;
  }
};

/// Factor C in the node bound C * (width + 2) * |V(T)| met by make_nice().
///
/// After contraction there are m <= |V(T)| nodes; binarising, subdividing
/// join edges and padding leaves give at most 4m + 1 nodes including the new
/// root, and expanding each edge into forget/introduce steps adds at most
/// 2(width + 1) - 1 nodes per node, so the total is at most
/// (4m + 1) * 2(width + 1) <= 10 * (width + 2) * m.
inline constexpr int kNiceNodeBoundFactor = 10;

/// First broken rule of the nice form, if any.
inline std::optional<std::string> nice_violation(const NiceRefinedTreeDecomposition& nice) {
  const auto& td = nice.decomposition;
  const int nodes = td.node_count();
  if (nodes == 0) return "no nodes";
  if (nice.parent.size() != static_cast<std::size_t>(nodes) || nice.children.size() != nice.parent.size() ||
      nice.kinds.size() != nice.parent.size())
    return "node arrays have inconsistent sizes";
  if (nice.parent[nice.root] != -1) return "root has a parent";
  if (!td.bags[nice.root].empty()) return "root bag is not empty";
  int edges = 0;
  for (Node t = 0; t < nodes; ++t) {
    for (Node c : nice.children[t]) {
      if (c < 0 || c >= nodes || nice.parent[c] != t) return "parent/child links disagree at node " + std::to_string(t);
      ++edges;
    }
    if (t != nice.root && nice.parent[t] < 0) return "node " + std::to_string(t) + " has no parent";
  }
  if (edges != nodes - 1 || td.tree_edges.size() != static_cast<std::size_t>(edges))
    return "tree edges disagree with parent links";
  if (nice.postorder().size() != static_cast<std::size_t>(nodes)) return "some node is unreachable from the root";

  for (Node t = 0; t < nodes; ++t) {
    const auto& kids = nice.children[t];
    const auto& bag = td.bags[t];
    const auto kind = nice.kinds[t];
    auto here = "node " + std::to_string(t) + ": ";
    switch (kind.type) {
    case NodeType::Leaf:
      if (!kids.empty()) return here + "leaf with children";
      if (!bag.empty()) return here + "leaf bag is not empty";
      break;
    case NodeType::Join:
      if (kids.size() != 2) return here + "join without exactly two children";
      if (td.bags[kids[0]] != bag || td.bags[kids[1]] != bag) return here + "join bag differs from a child bag";
      break;
    case NodeType::Introduce: {
      if (kids.size() != 1) return here + "introduce without exactly one child";
      const auto& child = td.bags[kids[0]];
      if (child.contains(kind.vertex) || !bag.contains(kind.vertex)) return here + "introduced vertex misplaced";
      auto expect = child;
      expect.insert(kind.vertex);
      if (expect != bag) return here + "bag is not child bag plus the introduced vertex";
      break;
    }
    case NodeType::Forget: {
      if (kids.size() != 1) return here + "forget without exactly one child";
      const auto& child = td.bags[kids[0]];
      if (!child.contains(kind.vertex) || bag.contains(kind.vertex)) return here + "forgotten vertex misplaced";
      auto expect = child;
      expect.erase(kind.vertex);
      if (expect != bag) return here + "bag is not child bag minus the forgotten vertex";
      break;
    }
    }
  }
  return std::nullopt;
}

namespace detail {

struct WorkNode {
  VertexSet bag;
  VertexSet refined;
  std::vector<int> children;
  bool join = false;
};

class NiceBuilder {
public:
  NiceBuilder(const RefinedTreeDecomposition& td) : n_(td.vertex_count) {}

  int add(VertexSet bag, VertexSet refined) {
    nodes_.push_back({std::move(bag), std::move(refined), {}, false});
    return static_cast<int>(nodes_.size()) - 1;
  }
  int add_empty() { return add(VertexSet(n_), VertexSet(n_)); }

  NiceRefinedTreeDecomposition build(const RefinedTreeDecomposition& input) {
    // 1. contract adjacent comparable bags
    RefinedTreeDecomposition td = contract_comparable_bags(input);
    const int m = td.node_count();
    auto adj = td.adjacency();

    // 2. root at the lowest-index node of degree <= 1
    int root = 0;
    while (root < m && adj[root].size() > 1) ++root;
    for (int t = 0; t < m; ++t) add(td.bags[t], td.refined[t]);
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      std::vector<int> kids;
      for (int s : adj[t])
        if (!seen[s]) {
          seen[s] = 1;
          kids.push_back(s);
          stack.push_back(s);
        }
      std::sort(kids.begin(), kids.end());
      nodes_[t].children = std::move(kids);
    }

    // 3. replace a node with d >= 3 children by a path t_1..t_d of copies
    for (int t = 0; t < m; ++t) {
      auto kids = nodes_[t].children;
      if (kids.size() < 3) continue;
      int current = t;
      for (std::size_t j = 0; j < kids.size(); ++j) {
        if (j + 1 == kids.size()) {
          nodes_[current].children = {kids[j]};
          break;
        }
        int next = add(nodes_[t].bag, nodes_[t].refined);
        nodes_[current].children = {kids[j], next};
        current = next;
      }
    }

    // 4. two children: join, with subdivisions towards differing child bags
    for (int t = 0, count = static_cast<int>(nodes_.size()); t < count; ++t) {
      if (nodes_[t].children.size() != 2) continue;
      nodes_[t].join = true;
      for (std::size_t i = 0; i < 2; ++i) {
        int c = nodes_[t].children[i];
        if (nodes_[c].bag == nodes_[t].bag) continue;
        int s = add(nodes_[t].bag, nodes_[t].refined);
        nodes_[s].children = {c};
        nodes_[t].children[i] = s;
      }
    }

    // 5. pad every leaf with an empty child
    for (int t = 0, count = static_cast<int>(nodes_.size()); t < count; ++t)
      if (nodes_[t].children.empty()) {
        int leaf = add_empty();
        nodes_[t].children = {leaf};
      }

    // 6. new empty root
    int top = add_empty();
    nodes_[top].children = {root};

    // 7. expand each non-join edge into forgets (ascending) then introduces (ascending)
    for (int t = 0, count = static_cast<int>(nodes_.size()); t < count; ++t) {
      if (nodes_[t].join || nodes_[t].children.size() != 1) continue;
      int child = nodes_[t].children[0];
      auto forget = (nodes_[child].bag - nodes_[t].bag).members();
      auto introduce = (nodes_[t].bag - nodes_[child].bag).members();
      const std::size_t steps = forget.size() + introduce.size();
      if (steps == 0) continue; // duplicate bag, merged below
      int below = child;
      VertexSet bag = nodes_[child].bag;
      std::size_t made = 0;
      for (Vertex v : forget) {
        if (++made == steps) break;
        bag.erase(v);
        int s = add(bag, nodes_[child].refined & bag);
        nodes_[s].children = {below};
        below = s;
      }
      for (Vertex v : introduce) {
        if (++made == steps) break;
        bag.insert(v);
        int s = add(bag, nodes_[t].refined & bag);
        nodes_[s].children = {below};
        below = s;
      }
      nodes_[t].children = {below};
    }

    return emit(top);
  }

private:
  // Skip non-join nodes whose bag equals their only child's, then number in preorder.
  int skip_duplicates(int t) const {
    while (!nodes_[t].join && nodes_[t].children.size() == 1 && nodes_[nodes_[t].children[0]].bag == nodes_[t].bag)
      t = nodes_[t].children[0];
    return t;
  }

  NiceRefinedTreeDecomposition emit(int top) const {
    NiceRefinedTreeDecomposition out;
    out.decomposition = RefinedTreeDecomposition(n_);
    std::vector<std::pair<int, Node>> stack{{skip_duplicates(top), -1}};
    while (!stack.empty()) {
      auto [w, parent] = stack.back();
      stack.pop_back();
      Node id = out.decomposition.add_node(nodes_[w].bag, nodes_[w].refined);
      out.parent.push_back(parent);
      out.children.emplace_back();
      out.kinds.emplace_back();
      if (parent >= 0) {
        out.children[parent].push_back(id);
        out.decomposition.add_edge(parent, id);
      }
      const auto& kids = nodes_[w].children;
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(skip_duplicates(*it), id);
    }
    const auto& bags = out.decomposition.bags;
    for (Node t = 0; t < out.node_count(); ++t) {
      const auto& kids = out.children[t];
      auto& kind = out.kinds[t];
      if (kids.empty()) {
        kind = {NodeType::Leaf, -1};
      } else if (kids.size() == 2) {
        kind = {NodeType::Join, -1};
      } else if (bags[kids[0]].is_subset_of(bags[t])) {
        kind = {NodeType::Introduce, (bags[t] - bags[kids[0]]).first()};
      } else {
        kind = {NodeType::Forget, (bags[kids[0]] - bags[t]).first()};
      }
    }
    out.root = 0;
    out.decomposition.canonicalize();
    return out;
  }

  int n_;
  std::vector<WorkNode> nodes_;
};

} // namespace detail

/// Converts a valid refined decomposition into nice form.
///
/// Every output node (X', U') has an input node (X, U) with X' a subset of X
/// and U' = U & X', so neither the width nor the residual independence number
/// grows. Deterministic: the root is the lowest-index node of degree <= 1
/// after contraction, and each edge expansion forgets then introduces in
/// ascending vertex order. At most kNiceNodeBoundFactor * (width + 2) * |V(T)| nodes.
inline NiceRefinedTreeDecomposition make_nice(const Graph& g, const RefinedTreeDecomposition& td) {
  require_valid(g, td);
  return detail::NiceBuilder(td).build(td);
}

} // namespace tin
