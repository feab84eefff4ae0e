#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/corpus.hpp"
#include "tin/tin.hpp"

namespace tin {
namespace {

std::set<std::string> family_strings(const BagIndependentFamily& f) {
  std::set<std::string> out;
  for (const auto& s : f.sets) out.insert(s.set.to_string());
  return out;
}

void expect_sound(const Graph& g, const WeightMap& w, const MwisResult& r) {
  EXPECT_TRUE(is_independent(g, r.set));
  EXPECT_EQ(w.total(r.set), r.weight);
}

TEST(EnumerateBagSets, Examples) {
  Graph p3 = gen::path(3);
  auto f = enumerate_bag_independent_sets(p3, VertexSet::full(3), VertexSet(3), 2);
  EXPECT_EQ(family_strings(f), (std::set<std::string>{"{}", "{0}", "{1}", "{2}", "{0,2}"}));
  EXPECT_EQ(f.size(), 5u);

  Graph k5 = gen::complete(5);
  EXPECT_EQ(enumerate_bag_independent_sets(k5, VertexSet::full(5), VertexSet(5), 1).size(), 6u);

  // C4 minus {0} is the path 1-2-3 with an independent pair, so k = 1 is a broken promise
  Graph c4 = gen::cycle(4);
  EXPECT_THROW(enumerate_bag_independent_sets(c4, VertexSet::full(4), VertexSet(4, {0}), 1), ResidualBoundViolated);
  auto marked = enumerate_bag_independent_sets(c4, VertexSet::full(4), VertexSet(4, {0}), 2);
  EXPECT_EQ(family_strings(marked), (std::set<std::string>{"{}", "{0}", "{1}", "{2}", "{3}", "{0,2}", "{1,3}"}));
  for (const auto& s : marked.sets) {
    EXPECT_EQ(s.marked | s.residual, s.set);
    EXPECT_EQ(s.marked, s.set & VertexSet(4, {0}));
  }
  auto split = enumerate_bag_independent_sets(c4, VertexSet::full(4), VertexSet(4, {1, 3}), 2);
  EXPECT_THROW(enumerate_bag_independent_sets(c4, VertexSet::full(4), VertexSet(4, {0, 1}), 0), ResidualBoundViolated);
  EXPECT_EQ(enumerate_bag_independent_sets(c4, VertexSet::full(4), VertexSet::full(4), 0).size(), 7u);
  EXPECT_EQ(family_strings(split), (std::set<std::string>{"{}", "{0}", "{1}", "{2}", "{3}", "{0,2}", "{1,3}"}));
}

TEST(EnumerateBagSets, Errors) {
  Graph p3 = gen::path(3);
  EXPECT_THROW(enumerate_bag_independent_sets(p3, VertexSet::full(3), VertexSet(3), 1), ResidualBoundViolated);
  EXPECT_THROW(enumerate_bag_independent_sets(p3, VertexSet::full(3), VertexSet(3), -1), InvalidInput);
  EXPECT_THROW(enumerate_bag_independent_sets(p3, VertexSet(3, {0}), VertexSet(3, {1}), 1), InvalidInput);
}

TEST(EnumerateBagSets, MatchesFilteredPowerSet) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    Graph g = testing::random_graph(n, 0.4, rng);
    auto adj = testing::masks_of(g);
    VertexSet bag(n), marked(n);
    std::bernoulli_distribution coin(0.6), mark(0.3);
    for (Vertex v = 0; v < n; ++v)
      if (coin(rng)) {
        bag.insert(v);
        if (mark(rng)) marked.insert(v);
      }
    const int k = testing::alpha_by_enumeration(induced_subgraph(g, bag - marked).graph);
    std::set<std::string> expect;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      VertexSet set(n);
      for (Vertex v = 0; v < n; ++v)
        if (s >> v & 1u) set.insert(v);
      if (set.is_subset_of(bag) && testing::mask_independent(adj, s)) expect.insert(set.to_string());
    }
    auto family = enumerate_bag_independent_sets(g, bag, marked, k);
    EXPECT_EQ(family.size(), expect.size());
    EXPECT_EQ(family_strings(family), expect);
  }
}

TEST(SolveMwis, Examples) {
  Graph p3 = gen::path(3);
  auto r = solve_mwis(p3, WeightMap({1, 5, 1}), trivial_decomposition(p3), 2);
  EXPECT_EQ(r.weight, Rational(5));
  EXPECT_EQ(r.set, VertexSet(3, {1}));

  r = solve_mwis(p3, WeightMap({3, 1, 3}), trivial_decomposition(p3), 2);
  EXPECT_EQ(r.weight, Rational(6));
  EXPECT_EQ(r.set, VertexSet(3, {0, 2}));

  Graph c5 = gen::cycle(5);
  EXPECT_EQ(solve_mwis(c5, WeightMap::uniform(5), trivial_decomposition(c5), 2).weight, Rational(2));

  Graph dj = gen::double_join(c5);
  auto witness = tin_exact(dj).witness;
  ASSERT_EQ(independence_number(dj, witness), 2);
  EXPECT_EQ(solve_mwis(dj, WeightMap::uniform(10), witness, 2).weight, Rational(2));
  EXPECT_EQ(brute_force_mwis(dj, WeightMap::uniform(10)).weight, Rational(2));
}

TEST(SolveMwisPlain, Examples) {
  Graph k33 = gen::complete_bipartite(3, 3);
  EXPECT_EQ(solve_mwis_plain(k33, WeightMap::uniform(6), trivial_decomposition(k33), 3).weight, Rational(3));

  Graph empty = gen::edgeless(6);
  EXPECT_EQ(solve_mwis_plain(empty, WeightMap::uniform(6), trivial_decomposition(empty), 6).weight, Rational(6));
  auto per_vertex = decomposition_from_elimination_order(empty, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(solve_mwis_plain(empty, WeightMap::uniform(6), per_vertex, 1).weight, Rational(6));

  auto marked = trivial_decomposition(k33);
  marked.refined[0].insert(0);
  EXPECT_THROW(solve_mwis_plain(k33, WeightMap::uniform(6), marked, 3), InvalidInput);
}

TEST(SolveMwisPlain, ChordalGraphsWithCliqueTrees) {
  std::mt19937_64 rng(22);
  int checked = 0;
  while (checked < 150) {
    Graph g = testing::random_graph(std::uniform_int_distribution<int>(1, 8)(rng), 0.5, rng);
    if (!is_chordal(g).chordal) continue;
    auto r = solve_mwis_plain(g, WeightMap::uniform(g.order()), clique_tree(g), 1);
    EXPECT_EQ(r.weight, Rational(testing::alpha_by_enumeration(g)));
    expect_sound(g, WeightMap::uniform(g.order()), r);
    ++checked;
  }
}

TEST(SolveMwis, Errors) {
  Graph p3 = gen::path(3);
  EXPECT_THROW(solve_mwis(p3, WeightMap::uniform(3), trivial_decomposition(p3), 1), ResidualBoundViolated);
  EXPECT_THROW(solve_mwis(p3, WeightMap::uniform(2), trivial_decomposition(p3), 2), InvalidInput);
  RefinedTreeDecomposition broken(3);
  broken.add_node(VertexSet(3, {0, 1}));
  EXPECT_THROW(solve_mwis(p3, WeightMap::uniform(3), broken, 2), InvalidDecomposition);
}

TEST(SolveMwis, MatchesEnumerationOnSmallGraphs) {
  std::mt19937_64 rng(23);
  for (int n = 0; n <= 5; ++n)
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      auto w = testing::random_weights(n, rng);
      const Rational expect = testing::mwis_by_enumeration(g, w);
      auto trivial = solve_mwis(g, w, trivial_decomposition(g), alpha_exact(g));
      ASSERT_EQ(trivial.weight, expect);
      expect_sound(g, w, trivial);
      auto tin = tin_exact(g);
      auto witnessed = solve_mwis(g, w, tin.witness, tin.value);
      ASSERT_EQ(witnessed.weight, expect);
      expect_sound(g, w, witnessed);
    });
}

TEST(SolveMwis, DecompositionIndependence) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 120; ++i) {
    Graph g = testing::random_graph(std::uniform_int_distribution<int>(6, 11)(rng), 0.4, rng);
    auto w = testing::random_weights(g.order(), rng);
    const Rational expect = brute_force_mwis(g, w).weight;
    auto perturbed = testing::random_decomposition(g, rng);
    auto r = solve_mwis(g, w, perturbed, residual_independence_number(g, perturbed));
    ASSERT_EQ(r.weight, expect);
    expect_sound(g, w, r);
    auto tin = tin_exact(g);
    ASSERT_EQ(solve_mwis(g, w, tin.witness, tin.value).weight, expect);
  }
}

TEST(SolveMwis, RefinementKeepsOptimum) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 150; ++i) {
    Graph g = testing::random_graph(std::uniform_int_distribution<int>(3, 10)(rng), 0.45, rng);
    auto w = testing::random_weights(g.order(), rng);
    auto td = testing::random_decomposition(g, rng);
    auto plain = solve_mwis(g, w, td, independence_number(g, td));
    auto marked = testing::with_random_marks(td, rng, 0.4);
    auto refined = solve_mwis(g, w, marked, residual_independence_number(g, marked));
    ASSERT_EQ(refined.weight, plain.weight);
    expect_sound(g, w, refined);
  }
}

TEST(SolveMwis, ZeroAndScaledWeights) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 60; ++i) {
    Graph g = testing::random_graph(std::uniform_int_distribution<int>(1, 9)(rng), 0.4, rng);
    auto td = trivial_decomposition(g);
    const int k = alpha_exact(g);
    auto zero = solve_mwis(g, WeightMap(std::vector<Rational>(g.order(), Rational(0))), td, k);
    EXPECT_EQ(zero.weight, Rational(0));
    EXPECT_TRUE(is_independent(g, zero.set));

    auto w = testing::random_weights(g.order(), rng);
    const Rational factor(7, 3);
    std::vector<Rational> scaled = w.values();
    for (auto& x : scaled) x *= factor;
    WeightMap ws(scaled);
    auto base = solve_mwis(g, w, td, k);
    auto big = solve_mwis(g, ws, td, k);
    EXPECT_EQ(big.weight, base.weight * factor);
    EXPECT_EQ(ws.total(base.set), big.weight);
  }
}

} // namespace
} // namespace tin
