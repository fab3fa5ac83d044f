#include <gtest/gtest.h>

#include "cactusvine/oracle.hpp"
#include "cactusvine/pipeline.hpp"
#include "support/fixtures.hpp"

using namespace cactusvine;
using namespace cactusvine::testing;

namespace {

std::string describe(const std::optional<CutSet>& c) { return c ? to_string(*c) : "none"; }

// returns number of mismatching items
int label_mismatches(const WeightedGraph& g, const TreePacking& p, const MincutInventory& inv) {
  LabelingResult r = label_all(g, p);
  EXPECT_EQ(r.lambda, inv.lambda);
  int bad = 0;
  auto check = [&](const MaybeLabel& l, const std::optional<CutSet>& want, const std::string& item) {
    std::optional<CutSet> got;
    if (l) got = materialize(*l, p.trees[l->tree]);
    if (got != want) {
      ++bad;
      ADD_FAILURE() << item << " got " << describe(got) << " want " << describe(want) << "\n" << to_dimacs(g);
    }
  };
  for (VertexId v = 0; v < g.n(); ++v) check(r.labels.vertex[v], inv.minimal_by_vertex[v], "vertex " + std::to_string(v));
  for (EdgeId e = 0; e < g.m(); ++e) check(r.labels.edge[e], inv.minimal_by_edge[e], "edge " + std::to_string(e));
  return bad;
}

}  // namespace

TEST(Labels, G1MatchesOracle) {
  WeightedGraph g = g1();
  MincutInventory inv = brute_mincuts(g);
  EXPECT_EQ(label_mismatches(g, exhaustive_packing(g), inv), 0);
}

TEST(Labels, CorpusExhaustiveMatchesOracle) {
  int bad_graphs = 0;
  for (const WeightedGraph& g : small_corpus(7, 150)) {
    MincutInventory inv = brute_mincuts(g);
    if (label_mismatches(g, exhaustive_packing(g), inv) > 0 && ++bad_graphs > 3) break;
  }
  EXPECT_EQ(bad_graphs, 0);
}
