#include <gtest/gtest.h>

#include <algorithm>

#include "cactusvine/labels.hpp"
#include "support/fixtures.hpp"

using namespace cactusvine;
using namespace cactusvine::testing;

namespace {

CutLabel random_label(const RootedSpanningTree& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> vd(0, t.n() - 1);
  for (;;) {
    VertexId v = vd(rng), w = vd(rng);
    if (v == t.root) continue;
    int k = std::uniform_int_distribution<int>(0, 2)(rng);
    if (k == 0) return make_label(CutKind::Type1, t, 0, v, kNoVertex, 0);
    if (w == t.root || w == v) continue;
    if (k == 1 && t.is_ancestor(v, w)) return make_label(CutKind::Comp2, t, 0, v, w, 0);
    if (k == 2 && !t.comparable(v, w)) return make_label(CutKind::Incomp2, t, 0, v, w, 0);
  }
}

}  // namespace

TEST(Labels, SizeAndContainsAgreeWithMaterialization) {
  std::mt19937_64 rng(31);
  int probes = 0;
  while (probes < 10000) {
    WeightedGraph g = random_connected_graph(rng, 25, 50, 4);
    RootedSpanningTree t = random_spanning_tree(g, rng);
    for (int i = 0; i < 100; ++i, ++probes) {
      CutLabel l = random_label(t, rng);
      CutSet s = materialize(l, t);
      ASSERT_EQ(static_cast<std::int64_t>(s.size()), l.size);
      ASSERT_EQ(label_query(l, LabelQuery::Size, g, t), l.size);
      VertexId x = std::uniform_int_distribution<VertexId>(0, g.n() - 1)(rng);
      ASSERT_EQ(label_query(l, LabelQuery::Contains, g, t, x) != 0, s.contains(x));
      ASSERT_EQ(label_query(l, LabelQuery::Weight, g, t), cut_weight(g, s));
    }
  }
}

TEST(Labels, G1ShapesFromSubtreeSizes) {
  WeightedGraph g = g1();
  RootedSpanningTree path = t_path(g);
  RootedSpanningTree branch = t_branch(g);
  EXPECT_EQ(make_label(CutKind::Type1, path, 0, C, kNoVertex, 2).size, 2);
  EXPECT_EQ(materialize(make_label(CutKind::Comp2, path, 0, B, D, 2), path), CutSet(4, {B, C}));
  EXPECT_EQ(materialize(make_label(CutKind::Incomp2, branch, 0, C, D, 2), branch), CutSet(4, {C, D}));
  EXPECT_EQ(label_weight(make_label(CutKind::Incomp2, branch, 0, C, D, 2), g, branch), 2);
}

TEST(Labels, CombineKeepsSmallestOfWeightLambda) {
  WeightedGraph g = g1();
  RootedSpanningTree t = t_path(g);
  CutLabel big = make_label(CutKind::Type1, t, 0, C, kNoVertex, 2);
  CutLabel small = make_label(CutKind::Comp2, t, 0, C, D, 2);
  CutLabel heavy = make_label(CutKind::Type1, t, 0, D, kNoVertex, 3);
  EXPECT_EQ(combine_candidates({big, small}, 2), small);
  EXPECT_EQ(combine_candidates({heavy, big}, 2), big);
  EXPECT_FALSE(combine_candidates({heavy}, 2).has_value());
  EXPECT_FALSE(combine_candidates({}, 2).has_value());
}

TEST(Labels, OfferIsOrderIndependent) {
  std::mt19937_64 rng(32);
  WeightedGraph g = random_connected_graph(rng, 12, 20, 3);
  RootedSpanningTree t = random_spanning_tree(g, rng);
  std::vector<CutLabel> cands;
  for (int i = 0; i < 30; ++i) {
    CutLabel l = random_label(t, rng);
    l.tree = i % 3;
    l.weight = i % 4 == 0 ? 9 : 5;
    cands.push_back(l);
  }
  MaybeLabel want = combine_candidates(cands, 5);
  for (int r = 0; r < 20; ++r) {
    std::shuffle(cands.begin(), cands.end(), rng);
    MaybeLabel slot;
    for (const CutLabel& c : cands) offer(slot, c, 5);
    EXPECT_EQ(slot, want);
  }
}
