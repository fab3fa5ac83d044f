#ifndef CACTUSVINE_RESPECT1_HPP
#define CACTUSVINE_RESPECT1_HPP

#include <limits>
#include <vector>

#include "cactusvine/labels.hpp"
#include "cactusvine/tree_context.hpp"

namespace cactusvine {

inline constexpr Wide kWideMax = std::numeric_limits<Wide>::max();

inline Wide one_respecting_minimum(const TreeContext& ctx) {
  Wide best = kWideMax;
  for (VertexId v = 0; v < ctx.t->n(); ++v)
    if (v != ctx.t->root && ctx.c1[v] < best) best = ctx.c1[v];
  return best;
}

// deepest ancestor-or-self v != r with C(v↓) = λ, per vertex
inline std::vector<VertexId> deepest_mincut_ancestor(const TreeContext& ctx, Wide lambda) {
  const RootedSpanningTree& t = *ctx.t;
  std::vector<VertexId> best(static_cast<std::size_t>(t.n()), kNoVertex);
  for (VertexId u : t.order) {
    if (u == t.root) continue;
    best[u] = ctx.c1[u] == lambda ? u : best[t.parent[u]];
  }
  return best;
}

// smallest 1-respecting mincut containing both endpoints of each edge
inline std::vector<MaybeLabel> type1_labels(const TreeContext& ctx, Wide lambda) {
  const RootedSpanningTree& t = *ctx.t;
  std::vector<VertexId> best = deepest_mincut_ancestor(ctx, lambda);
  std::vector<MaybeLabel> out(static_cast<std::size_t>(ctx.g->m()));
  for (EdgeId e = 0; e < ctx.g->m(); ++e) {
    VertexId v = best[ctx.edge_lca[e]];
    if (v != kNoVertex) out[e] = make_label(CutKind::Type1, t, ctx.tree_id, v, kNoVertex, lambda);
  }
  return out;
}

}  // namespace cactusvine

#endif  // CACTUSVINE_RESPECT1_HPP
