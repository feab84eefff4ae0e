#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tin/decomposition.hpp"
#include "tin/graph.hpp"
#include "tin/nice.hpp"
#include "tin/rational.hpp"

namespace tin {

/// One independent subset S of a bag, split along the bag's marked set U.
struct BagSet {
  VertexSet set;
  VertexSet marked;   // S & U
  VertexSet residual; // S & (X \ U)
};

/// All independent subsets of a bag X, in a fixed order: grouped by the
/// marked part, each group ordered as the residual parts are enumerated.
struct BagIndependentFamily {
  std::vector<BagSet> sets;
  std::size_t size() const noexcept { return sets.size(); }
};

namespace detail {

// Independent subsets of `pool` (ascending) of size <= limit; limit < 0 means unbounded.
// Returns false if an independent subset of size limit + 1 exists.
inline bool independent_subsets(const Graph& g, const std::vector<Vertex>& pool, int limit,
                                std::vector<VertexSet>& out) {
  VertexSet current(g.order());
  VertexSet blocked(g.order());
  bool within = true;
  auto rec = [&](auto&& self, std::size_t from, int size) -> void {
    out.push_back(current);
    for (std::size_t i = from; i < pool.size() && within; ++i) {
      Vertex v = pool[i];
      if (blocked.contains(v)) continue;
      if (limit >= 0 && size == limit) {
        within = false;
        return;
      }
      VertexSet saved = blocked;
      current.insert(v);
      blocked |= g.row(v);
      self(self, i + 1, size + 1);
      current.erase(v);
      blocked = std::move(saved);
    }
  };
  rec(rec, 0, 0);
  return within;
}

} // namespace detail

/// Enumerates the independent subsets of `bag`: every independent subset of
/// the marked set combined with every independent subset of at most k
/// residual vertices. Throws ResidualBoundViolated when bag \ marked holds an
/// independent set of size k + 1.
inline BagIndependentFamily enumerate_bag_independent_sets(const Graph& g, const VertexSet& bag,
                                                           const VertexSet& marked, int k) {
  if (k < 0) throw InvalidInput("residual bound k must be nonnegative");
  if (!marked.is_subset_of(bag)) throw InvalidInput("marked set is not inside the bag");
  std::vector<VertexSet> marked_parts, residual_parts;
  detail::independent_subsets(g, marked.members(), -1, marked_parts);
  if (!detail::independent_subsets(g, (bag - marked).members(), k, residual_parts))
    throw ResidualBoundViolated("bag " + bag.to_string() + " minus marked " + marked.to_string() +
                                " has an independent set of size " + std::to_string(k + 1));
  std::vector<VertexSet> residual_nbhd;
  for (const auto& r : residual_parts) {
    VertexSet nb(g.order());
    r.for_each([&](Vertex v) { nb |= g.row(v); });
    residual_nbhd.push_back(std::move(nb));
  }
  BagIndependentFamily family;
  for (const auto& m : marked_parts)
    for (std::size_t i = 0; i < residual_parts.size(); ++i)
      if (!residual_nbhd[i].intersects(m)) family.sets.push_back({m | residual_parts[i], m, residual_parts[i]});
  return family;
}

struct MwisResult {
  Rational weight;
  VertexSet set;
};

namespace detail {

struct DpCell {
  Rational value;
  bool took_forgotten = false; // forget nodes: optimum came from S + v
};

using DpTable = std::map<VertexSet, DpCell>;

} // namespace detail

/// Max Weight Independent Set over a refined tree decomposition whose
/// residual independence number is at most k.
///
/// The decomposition is made nice, then the table c[t, S] (best weight of an
/// independent set of G[V_t] meeting X_t exactly in S) is filled bottom-up for
/// the independent subsets S of each bag only. Forget nodes keep the entry
/// without v on ties. The returned set is rebuilt from the tables and checked
/// before returning. Cost O(2^l * n^(k+1) * |V(T)|) table entries.
inline MwisResult solve_mwis(const Graph& g, const WeightMap& w, const RefinedTreeDecomposition& td, int k) {
  if (w.size() != g.order())
    throw InvalidInput("weight map has " + std::to_string(w.size()) + " entries for " + std::to_string(g.order()) +
                       " vertices");
  const auto nice = make_nice(g, td);
  const auto& bags = nice.decomposition.bags;
  const auto& marks = nice.decomposition.refined;
  std::vector<detail::DpTable> table(static_cast<std::size_t>(nice.node_count()));

  for (Node t : nice.postorder()) {
    const auto kind = nice.kinds[t];
    const auto& kids = nice.children[t];
    auto& cell = table[t];
    if (kind.type == NodeType::Leaf) {
      cell.emplace(VertexSet(g.order()), detail::DpCell{0, false});
      continue;
    }
    const auto family = enumerate_bag_independent_sets(g, bags[t], marks[t], k);
    for (const auto& entry : family.sets) {
      const VertexSet& s = entry.set;
      detail::DpCell c;
      switch (kind.type) {
      case NodeType::Introduce: {
        if (s.contains(kind.vertex)) {
          VertexSet rest = s;
          rest.erase(kind.vertex);
          c.value = table[kids[0]].at(rest).value + w[kind.vertex];
        } else {
          c.value = table[kids[0]].at(s).value;
        }
        break;
      }
      case NodeType::Forget: {
        const auto& child = table[kids[0]];
        c.value = child.at(s).value;
        VertexSet with = s;
        with.insert(kind.vertex);
        if (auto it = child.find(with); it != child.end() && it->second.value > c.value) {
          c.value = it->second.value;
          c.took_forgotten = true;
        }
        break;
      }
      case NodeType::Join:
        c.value = table[kids[0]].at(s).value + table[kids[1]].at(s).value - w.total(s);
        break;
      case NodeType::Leaf: break;
      }
      cell.emplace(s, std::move(c));
    }
  }

  MwisResult result{table[nice.root].at(VertexSet(g.order())).value, VertexSet(g.order())};
  std::vector<std::pair<Node, VertexSet>> stack{{nice.root, VertexSet(g.order())}};
  while (!stack.empty()) {
    auto [t, s] = std::move(stack.back());
    stack.pop_back();
    result.set |= s;
    const auto kind = nice.kinds[t];
    const auto& kids = nice.children[t];
    switch (kind.type) {
    case NodeType::Leaf: break;
    case NodeType::Introduce:
      s.erase(kind.vertex);
      stack.emplace_back(kids[0], std::move(s));
      break;
    case NodeType::Forget:
      if (table[t].at(s).took_forgotten) s.insert(kind.vertex);
      stack.emplace_back(kids[0], std::move(s));
      break;
    case NodeType::Join:
      stack.emplace_back(kids[0], s);
      stack.emplace_back(kids[1], std::move(s));
      break;
    }
  }
  if (!is_independent(g, result.set) || w.total(result.set) != result.weight)
    throw std::logic_error("MWIS reconstruction produced an inconsistent witness");
  return result;
}

/// Specialisation to ordinary tree decompositions (every U_t empty) with
/// independence number at most k: O(n^(k+1) * |V(T)|).
inline MwisResult solve_mwis_plain(const Graph& g, const WeightMap& w, const RefinedTreeDecomposition& td, int k) {
  for (const auto& u : td.refined)
    if (!u.empty()) throw InvalidInput("solve_mwis_plain expects every refined set to be empty");
  return solve_mwis(g, w, td, k);
}

} // namespace tin
