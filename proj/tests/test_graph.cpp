#include <gtest/gtest.h>

#include "cactusvine/graph.hpp"
#include "support/fixtures.hpp"

using namespace cactusvine;
using namespace cactusvine::testing;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ErrorCode::AlgorithmInvariantViolation;
}

}  // namespace

TEST(Graph, ParsesHeaderCommentsAndRoot) {
  WeightedGraph g = parse_graph("c a comment\np edge 3 2\n# another\nr 2\ne 1 2 4\ne 2 3 1\n");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 2);
  EXPECT_EQ(g.root(), 1);
  EXPECT_EQ(g.edge(0).w, 4);
  EXPECT_EQ(g.weighted_degree(1), 5);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_EQ(parse_error("e 1 2 1\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("p 2 1\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("p 2 1\ne 1 3 1\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("p 2 1\ne 1 1 1\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("p 2 1\ne 1 2 0\n"), ErrorCode::NonPositiveWeight);
  EXPECT_EQ(parse_error("p 2 1\ne 1 2 -3\n"), ErrorCode::NonPositiveWeight);
  EXPECT_EQ(parse_error("p 2 1\ne 1 2 1 9\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("p 2 1\nq 1 2\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("p 4 2\ne 1 2 1\ne 3 4 1\n"), ErrorCode::Disconnected);
  EXPECT_EQ(parse_error(""), ErrorCode::MalformedInput);
}

TEST(Graph, DimacsRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    WeightedGraph g = random_connected_graph(rng, 9, 20, 8).with_root(i % 9);
    WeightedGraph h = parse_graph(to_dimacs(g));
    EXPECT_EQ(to_dimacs(h), to_dimacs(g));
    EXPECT_EQ(h.root(), g.root());
  }
}

TEST(Graph, CutWeightsAndCanonicalSide) {
  WeightedGraph g = g1();
  EXPECT_EQ(cut_weight(g, CutSet(4, {B})), 2);
  EXPECT_EQ(cut_weight(g, CutSet(4, {B, D})), 4);
  std::vector<char> side{1, 1, 0, 0};
  CutSet c = CutSet::canonical(side, g.root());
  EXPECT_EQ(c.members(), (std::vector<VertexId>{C, D}));
  EXPECT_FALSE(CutSet(4, {A, B}).valid_for(g));
  EXPECT_THROW(cut_weight(g, CutSet(4, {A})), Error);
}

TEST(Graph, LoopsDoNotChangeCuts) {
  std::mt19937_64 rng(5);
  WeightedGraph g = random_connected_graph(rng, 8, 14, 5);
  WeightedGraph aug = g.with_vertex_loops();
  ASSERT_EQ(aug.m(), g.m() + g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    EXPECT_EQ(aug.edge(g.m() + v).u, v);
    EXPECT_EQ(aug.edge(g.m() + v).w, 0);
  }
  for (unsigned mask = 1; mask < (1u << g.n()); mask += 7) {
    std::vector<char> side(g.n());
    for (VertexId v = 0; v < g.n(); ++v) side[v] = mask >> v & 1;
    EXPECT_EQ(cut_weight(g, side), cut_weight(aug, side));
  }
}

TEST(Graph, MergeKeepsCrossingWeight) {
  WeightedGraph g = g1();
  MergeResult r = merge_vertices(g, {{A, B}, {C}, {D}});
  EXPECT_EQ(r.graph.n(), 3);
  EXPECT_EQ(r.map[A], r.map[B]);
  EXPECT_EQ(r.graph.m(), 3);
  EXPECT_EQ(r.graph.root(), r.map[A]);
  EXPECT_THROW(merge_vertices(g, {{A, B}, {C}}), Error);
}
