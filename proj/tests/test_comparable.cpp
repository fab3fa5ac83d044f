#include <gtest/gtest.h>

#include <map>

#include "cactusvine/comparable.hpp"
#include "cactusvine/pipeline.hpp"
#include "support/brute.hpp"
#include "support/cases.hpp"
#include "support/fixtures.hpp"

using namespace cactusvine;
using namespace cactusvine::testing;

namespace {

// u↓ \ l↓ with l strictly below u
struct RightEdge {
  EdgeId item;
  VertexId upper, lower;
};

std::vector<RightEdge> right_edges(const Case& c) {
  std::vector<RightEdge> out;
  for (EdgeId item = 0; item < c.aug.m(); ++item) {
    std::optional<CutSet> x = oracle_item(c.g, c.inv, item);
    if (!x) continue;
    std::optional<Shape> s = respect_shape(c.t, *x);
    if (s && s->kind == CutKind::Comp2) out.push_back({item, s->v, s->w});
  }
  return out;
}

std::vector<VertexId> below_with_partner_above(const Case& c, const std::vector<VertexId>& h, VertexId u) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < c.g.n(); ++v)
    if (v != u && c.t.is_ancestor(u, v) && h[v] != kNoVertex && c.t.is_ancestor(h[v], u)) out.push_back(v);
  return out;
}

std::vector<VertexId> minus(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  a.erase(std::remove_if(a.begin(), a.end(), [&](VertexId x) { return std::find(b.begin(), b.end(), x) != b.end(); }),
          a.end());
  return a;
}

std::vector<VertexId> join(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST(Comparable, G1PathTreeLabels) {
  WeightedGraph g = g1();
  WeightedGraph aug = g.with_vertex_loops();
  RootedSpanningTree t = t_path(aug);
  TreeContext ctx = make_tree_context(aug, t, 0);
  PartnerTable h = highest_partner_minima(ctx);
  EXPECT_EQ(h.minimum(), 2);
  std::vector<MaybeLabel> labels = comparable_labels(ctx, h.accepted(2), 2);
  ASSERT_TRUE(labels[1].has_value());
  EXPECT_EQ(labels[1]->kind, CutKind::Comp2);
  EXPECT_EQ(labels[1]->v, B);
  EXPECT_EQ(labels[1]->w, D);
  EXPECT_EQ(materialize(*labels[1], t), CutSet(4, {B, C}));
  ASSERT_TRUE(labels[g.m() + B].has_value());
  EXPECT_EQ(labels[g.m() + B]->v, B);
  EXPECT_EQ(labels[g.m() + B]->w, C);
  EXPECT_EQ(materialize(*labels[g.m() + B], t), CutSet(4, {B}));
}

TEST(Comparable, TrianglePathHasNoComparableLabelForLastLoop) {
  WeightedGraph g = g_tri();
  WeightedGraph aug = g.with_vertex_loops();
  RootedSpanningTree t = build_rooted_tree(aug, {0, 1}, A);
  TreeContext ctx = make_tree_context(aug, t, 0);
  PartnerTable h = highest_partner_minima(ctx);
  std::vector<MaybeLabel> labels = comparable_labels(ctx, h.accepted(2), 2);
  EXPECT_FALSE(labels[g.m() + C].has_value());
  ASSERT_TRUE(labels[g.m() + B].has_value());
  EXPECT_EQ(materialize(*labels[g.m() + B], t), CutSet(3, {B}));
}

TEST(Comparable, HighestPartnerMinimaMatchBruteForce) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 150; ++iter) {
    WeightedGraph aug = random_connected_graph(rng, 3 + iter % 12, 30, 7).with_vertex_loops();
    RootedSpanningTree t = random_spanning_tree(aug, rng);
    TreeContext ctx = make_tree_context(aug, t, 0);
    PartnerTable h = highest_partner_minima(ctx);
    for (VertexId v = 0; v < aug.n(); ++v) {
      Wide best = kWideMax;
      VertexId arg = kNoVertex;
      for (VertexId w = v == t.root ? kNoVertex : t.parent[v]; w != kNoVertex && w != t.root; w = t.parent[w]) {
        Wide c = cut_weight(aug, shape_mask(t, CutKind::Comp2, w, v));
        if (c <= best) {
          best = c;
          arg = w;
        }
      }
      EXPECT_EQ(h.cut[v], best);
      EXPECT_EQ(h.partner[v], arg);
    }
  }
}

TEST(Comparable, AcceptedPartnersAreHighestMincutPartners) {
  for (const Case& c : respecting_cases(62, 200))
    for (VertexId v = 0; v < c.g.n(); ++v)
      if (v != c.t.root) EXPECT_EQ(c.highest[v], brute_highest_partner(c.t, c.inv, v));
}

TEST(Comparable, LowerVerticesOfRightEdges) {
  int checked = 0;
  for (const Case& c : respecting_cases(63, 300)) {
    LowerVertices low = compute_lower_vertices(c.ctx, c.highest);
    for (const RightEdge& r : right_edges(c)) {
      EXPECT_EQ(low.lower[r.item], r.lower);
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(Comparable, PinpointLowerVertex) {
  int checked = 0;
  for (const Case& c : respecting_cases(64, 300)) {
    for (const RightEdge& r : right_edges(c)) {
      const Edge& e = c.aug.edge(r.item);
      VertexId lca_e = lca(c.t, e.u, e.v);
      VertexId x = lca(c.t, r.lower, lca_e);
      std::vector<VertexId> y = join(path_vertices(c.t, e.u, e.v), path_vertices(c.t, x, lca_e));
      EXPECT_EQ(top_vertices(c.t, minus(below_with_partner_above(c, c.highest, x), y)),
                std::vector<VertexId>{r.lower});
      for (VertexId u = lca_e; u != x; u = c.t.parent[u]) {
        std::vector<VertexId> yu = join(path_vertices(c.t, e.u, e.v), path_vertices(c.t, u, lca_e));
        EXPECT_TRUE(top_vertices(c.t, minus(below_with_partner_above(c, c.highest, u), yu)).empty());
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(Comparable, PackageSharing) {
  int shared = 0;
  for (const Case& c : respecting_cases(65, 300)) {
    std::vector<RightEdge> rs = right_edges(c);
    for (VertexId v = 0; v < c.g.n(); ++v) {
      std::vector<RightEdge> group;
      for (const RightEdge& r : rs) {
        const Edge& e = c.aug.edge(r.item);
        if (c.t.is_ancestor(v, e.u) && c.t.is_ancestor(v, e.v) && !c.t.is_ancestor(v, r.lower) && r.upper != v &&
            c.t.is_ancestor(r.upper, v))
          group.push_back(r);
      }
      for (std::size_t i = 1; i < group.size(); ++i) {
        EXPECT_EQ(group[i].upper, group[0].upper);
        EXPECT_EQ(group[i].lower, group[0].lower);
        ++shared;
      }
    }
    LowerVertices low = compute_lower_vertices(c.ctx, c.highest);
    std::map<int, CutSet> by_event;
    for (const RightEdge& r : rs) {
      int ev = low.event[r.item];
      ASSERT_GE(ev, 0);
      CutSet x = *oracle_item(c.g, c.inv, r.item);
      auto [it, fresh] = by_event.emplace(ev, x);
      if (!fresh) EXPECT_EQ(it->second, x);
    }
  }
  EXPECT_GT(shared, 20);
}

TEST(Comparable, CandidatesAreMincutsContainingTheItem) {
  for (const Case& c : respecting_cases(66, 300)) {
    std::vector<MaybeLabel> labels = comparable_labels(c.ctx, c.highest, c.inv.lambda);
    for (EdgeId item = 0; item < c.aug.m(); ++item) {
      if (!labels[item]) continue;
      std::vector<char> m = shape_mask(c.t, CutKind::Comp2, labels[item]->v, labels[item]->w);
      EXPECT_TRUE(is_mincut(c.inv, m));
      EXPECT_TRUE(item_inside(c.aug, m, item));
    }
  }
}
