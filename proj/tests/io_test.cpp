#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support/corpus.hpp"
#include "tin/tin.hpp"

namespace tin {
namespace {

template <typename F>
auto parse(F&& read, const std::string& text) {
  std::istringstream in(text);
  return read(in);
}

Graph graph_from(const std::string& text) { return parse([](std::istream& in) { return io::read_graph(in); }, text); }
RefinedTreeDecomposition td_from(const std::string& text) {
  return parse([](std::istream& in) { return io::read_td(in); }, text);
}

TEST(GraphFormat, ReadsCommentsAndBlankLines) {
  Graph g = graph_from("c a path\n\np tw 3 2\n1 2\nc middle\n2 3\n");
  EXPECT_EQ(g, gen::path(3));
}

TEST(GraphFormat, RoundTrip) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_graph(std::uniform_int_distribution<int>(0, 15)(rng), 0.3, rng);
    EXPECT_EQ(graph_from(io::to_text(io::write_graph, g)), g);
  }
}

TEST(GraphFormat, Malformed) {
  EXPECT_THROW(graph_from(""), ParseError);
  EXPECT_THROW(graph_from("p td 3 1\n1 2\n"), ParseError);
  EXPECT_THROW(graph_from("p tw 3 1\n1 4\n"), ParseError);
  EXPECT_THROW(graph_from("p tw 3 2\n1 2\n"), ParseError);
  EXPECT_THROW(graph_from("p tw 3 1\n2 2\n"), ParseError);
  EXPECT_THROW(graph_from("p tw 3 1\n1 x\n"), ParseError);
  EXPECT_THROW(graph_from("p tw 3 1\n1 2 3\n"), ParseError);
  EXPECT_EQ(graph_from("p tw 3 2\n1 2\n2 1\n").edge_count(), 1);
  try {
    graph_from("p tw 3 1\n\n1 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(WeightFormat, DefaultsAndValues) {
  std::istringstream in("1 7/2\n3 0.25\nc skip\n");
  auto w = io::read_weights(in, 4);
  EXPECT_EQ(w[0], Rational(7, 2));
  EXPECT_EQ(w[1], Rational(1));
  EXPECT_EQ(w[2], Rational(1, 4));
  EXPECT_EQ(w[3], Rational(1));
  std::istringstream back(io::to_text(io::write_weights, w));
  EXPECT_EQ(io::read_weights(back, 4).values(), w.values());
}

TEST(WeightFormat, Malformed) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_weights(in, 3);
  };
  EXPECT_THROW(read("1 -2\n"), ParseError);
  EXPECT_THROW(read("1 2\n1 3\n"), ParseError);
  EXPECT_THROW(read("4 1\n"), ParseError);
  EXPECT_THROW(read("1 1/0\n"), ParseError);
  EXPECT_THROW(read("1 abc\n"), ParseError);
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(parse_rational("4/8"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(format_rational(Rational(6)), "6/1");
  EXPECT_EQ(format_rational(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(format_rational(Rational(0)), "0/1");
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational("1e3"), ParseError);
  EXPECT_THROW(parse_rational("."), ParseError);
}

TEST(TdFormat, RoundTripTrivialCycle) {
  Graph c4 = gen::cycle(4);
  auto td = trivial_decomposition(c4);
  auto text = io::to_text(io::write_td, td);
  EXPECT_EQ(text, "s td 1 4 4\nb 1 1 2 3 4\n");
  EXPECT_EQ(td_from(text), td);
}

TEST(TdFormat, RoundTripRandom) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::random_graph(std::uniform_int_distribution<int>(0, 10)(rng), 0.3, rng);
    auto td = testing::with_random_marks(testing::random_decomposition(g, rng), rng);
    auto canon = td;
    canon.canonicalize();
    auto text = io::to_text(io::write_td, td);
    auto back = td_from(text);
    EXPECT_EQ(back, canon);
    EXPECT_EQ(io::to_text(io::write_td, back), text);
  }
}

TEST(TdFormat, PaceFileHasNoMarks) {
  auto td = td_from("c PACE style\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  ASSERT_EQ(td.node_count(), 2);
  EXPECT_EQ(td.refinement(), 0);
  EXPECT_TRUE(validate(gen::path(3), td).ok());
}

TEST(TdFormat, ReadsMarks) {
  auto td = td_from("s td 2 2 3\nb 1 1 2\nb 2 2 3\nr 2 3\n2 1\n");
  EXPECT_EQ(td.refined[1], VertexSet(3, {2}));
  EXPECT_EQ(td.tree_edges, (std::vector<std::pair<Node, Node>>{{0, 1}}));
}

TEST(TdFormat, Malformed) {
  EXPECT_THROW(td_from(""), ParseError);
  EXPECT_THROW(td_from("s td 1 2\nb 1 1 2\n"), ParseError);
  EXPECT_THROW(td_from("s td 1 2 3\nb 1 1 2\nr 1 3\n"), ParseError);
  EXPECT_THROW(td_from("s td 1 2 3\nb 2 1 2\n"), ParseError);
  EXPECT_THROW(td_from("s td 2 2 3\nb 1 1 2\n"), ParseError);
  EXPECT_THROW(td_from("s td 1 1 3\nb 1 1 2\n"), ParseError);
  EXPECT_THROW(td_from("s td 1 2 3\nb 1 1 4\n"), ParseError);
  EXPECT_THROW(td_from("s td 1 2 3\nb 1 1 2\nb 1 1 2\n"), ParseError);
  EXPECT_THROW(td_from("s td 2 2 3\nb 1 1 2\nb 2 3\n1 3\n"), ParseError);
  EXPECT_THROW(td_from("s td 0 0 0\n"), ParseError);
}

TEST(FamilyFormat, RoundTrip) {
  Graph p4 = gen::path(4);
  auto text = std::string("s fam 2\nf 1 7/2 2 2 1\nf 2 0.5 1 4\n");
  std::istringstream in(text);
  auto inst = io::read_family(in, 4);
  ASSERT_EQ(inst.family.size(), 2);
  EXPECT_EQ(inst.family.members[0], VertexSet(4, {0, 1}));
  EXPECT_EQ(inst.weights[1], Rational(1, 2));
  EXPECT_NO_THROW(check_instance(p4, inst));
  EXPECT_EQ(io::to_text(io::write_family, inst), "s fam 2\nf 1 7/2 2 1 2\nf 2 1/2 1 4\n");
}

TEST(FamilyFormat, Malformed) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_family(in, 4);
  };
  EXPECT_THROW(read("s fam 1\nf 1 1 2 1\n"), ParseError);
  EXPECT_THROW(read("s fam 1\nf 1 1 2 1 1\n"), ParseError);
  EXPECT_THROW(read("s fam 2\nf 1 1 1 1\n"), ParseError);
  EXPECT_THROW(read("s fam 1\nf 1 -1 1 1\n"), ParseError);
  EXPECT_THROW(read("s fam 1\nf 1 1 1 5\n"), ParseError);
  EXPECT_THROW(read("s family 1\n"), ParseError);
  EXPECT_THROW(read("s fam 1\ng 1 1 1 1\n"), ParseError);
}

TEST(VertexSetFormat, Reads) {
  std::istringstream in("1 3\n5\n");
  EXPECT_EQ(io::read_vertex_set(in, 5), VertexSet(5, {0, 2, 4}));
  std::istringstream bad("0\n");
  EXPECT_THROW(io::read_vertex_set(bad, 5), ParseError);
}

} // namespace
} // namespace tin
