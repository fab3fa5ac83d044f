#ifndef CACTUSVINE_TREE_CONTEXT_HPP
#define CACTUSVINE_TREE_CONTEXT_HPP

#include <vector>

#include "cactusvine/dyn_forest.hpp"
#include "cactusvine/graph.hpp"
#include "cactusvine/rooted_tree.hpp"

namespace cactusvine {

// partner-dependent part of a 2-respecting cut: C(w↓) ± 2 C(v↓, w↓)
inline Wide comparable_precut(Wide c_w, Wide c_vw) { return c_w + 2 * c_vw; }
inline Wide incomparable_precut(Wide c_w, Wide c_vw) { return c_w - 2 * c_vw; }

// C(v↓ ∪ w↓) for incomparable v, w
inline Wide incomparable_cut(Wide c_v, Wide precut) { return c_v + precut; }

// per-tree tables shared by the labeling passes; g is usually the loop-augmented graph
struct TreeContext {
  const WeightedGraph* g = nullptr;
  const RootedSpanningTree* t = nullptr;
  int tree_id = 0;
  LcaIndex lca;
  PathDecomposition pd;
  std::vector<VertexId> edge_lca;
  std::vector<Wide> c1;     // C(v↓)
  std::vector<Wide> inner;  // C(v↓, v↓), twice the weight inside v↓

  Wide comparable_cut(VertexId v, const ForestValue& precut) const { return precut.fin - c1[v] - 2 * inner[v]; }
};

inline TreeContext make_tree_context(const WeightedGraph& g, const RootedSpanningTree& t, int tree_id) {
  TreeContext ctx;
  ctx.g = &g;
  ctx.t = &t;
  ctx.tree_id = tree_id;
  ctx.lca = LcaIndex(t);
  ctx.pd = heavy_path_decomposition(t);
  const VertexId n = g.n();
  ctx.edge_lca.resize(static_cast<std::size_t>(g.m()));
  ctx.c1.assign(static_cast<std::size_t>(n), 0);
  ctx.inner.assign(static_cast<std::size_t>(n), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    VertexId l = ctx.lca.lca(ed.u, ed.v);
    ctx.edge_lca[e] = l;
    if (ed.u == ed.v || ed.w == 0) continue;
    ctx.c1[ed.u] += ed.w;
    ctx.c1[ed.v] += ed.w;
    ctx.c1[l] -= 2 * static_cast<Wide>(ed.w);
    ctx.inner[l] += 2 * static_cast<Wide>(ed.w);
  }
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    VertexId p = t.parent[*it];
    if (p == kNoVertex) continue;
    ctx.c1[p] += ctx.c1[*it];
    ctx.inner[p] += ctx.inner[*it];
  }
  return ctx;
}

// replays inverse path additions to restore forest values
class PathLog {
 public:
  void add(DynForest& f, VertexId u, const ForestValue& x) {
    f.add_path(u, x);
    log_.push_back({u, x});
  }

  void rollback(DynForest& f) {
    for (auto it = log_.rbegin(); it != log_.rend(); ++it) f.add_path(it->first, -it->second);
    log_.clear();
  }

 private:
  std::vector<std::pair<VertexId, ForestValue>> log_;
};

// calls fn(u) for u in v↓ \ prev↓, where prev is a child of v or kNoVertex
template <class Fn>
void for_each_new_vertex(const RootedSpanningTree& t, VertexId v, VertexId prev, Fn&& fn) {
  const VertexId* b = t.subtree_begin(v);
  const VertexId* e = t.subtree_end(v);
  if (prev == kNoVertex) {
    for (const VertexId* it = b; it != e; ++it) fn(*it);
    return;
  }
  const VertexId* pb = t.subtree_begin(prev);
  const VertexId* pe = t.subtree_end(prev);
  for (const VertexId* it = b; it != pb; ++it) fn(*it);
  for (const VertexId* it = pe; it != e; ++it) fn(*it);
}

}  // namespace cactusvine

#endif  // CACTUSVINE_TREE_CONTEXT_HPP
