#ifndef CACTUSVINE_INCOMPARABLE_HPP
#define CACTUSVINE_INCOMPARABLE_HPP

#include <map>
#include <vector>

#include "cactusvine/comparable.hpp"
#include "cactusvine/dyn_forest.hpp"
#include "cactusvine/labels.hpp"
#include "cactusvine/tree_context.hpp"

namespace cactusvine {

inline DynForest incomparable_forest(const TreeContext& ctx) {
  const RootedSpanningTree& t = *ctx.t;
  std::vector<ForestValue> init(static_cast<std::size_t>(t.n()));
  for (VertexId w = 0; w < t.n(); ++w) init[w] = ForestValue::finite(ctx.c1[w]);
  return DynForest(t, init);
}

// per v, the smallest-subtree w incomparable to v minimizing C(v↓ ∪ w↓)
inline PartnerTable incomparable_partner_minima(const TreeContext& ctx) {
  const RootedSpanningTree& t = *ctx.t;
  const WeightedGraph& g = *ctx.g;
  PartnerTable out{std::vector<VertexId>(static_cast<std::size_t>(t.n()), kNoVertex),
                   std::vector<Wide>(static_cast<std::size_t>(t.n()), kWideMax)};
  DynForest f = incomparable_forest(ctx);
  PathLog log;
  for (const auto& path : ctx.pd.paths) {
    if (t.parent[path.front()] != kNoVertex) log.add(f, t.parent[path.front()], ForestValue::infinity());
    VertexId prev = kNoVertex;
    for (VertexId v : path) {
      for_each_new_vertex(t, v, prev, [&](VertexId u) {
        auto [b, e] = g.incident(u);
        for (const EdgeId* it = b; it != e; ++it) {
          const Edge& ed = g.edge(*it);
          if (ed.u == ed.v || ed.w == 0) continue;
          log.add(f, g.other(*it, u), ForestValue::finite(-2 * static_cast<Wide>(ed.w)));
        }
      });
      prev = v;
      VertexId p = t.parent[v];
      if (p == kNoVertex) continue;
      f.cut_parent(v);
      ForestMin m = f.min_tree(p, TreeTie::SmallestSubtree);
      f.link(v, p);
      if (m.value.is_inf()) continue;
      out.partner[v] = m.vertex;
      out.cut[v] = incomparable_cut(ctx.c1[v], m.value.fin);
    }
    log.rollback(f);
  }
  return out;
}

// smallest incomparable mincut containing u, taken over the ancestors of u
inline std::vector<MaybeLabel> incomparable_vertex_labels(const TreeContext& ctx, const std::vector<VertexId>& partner,
                                                          Wide lambda) {
  const RootedSpanningTree& t = *ctx.t;
  std::vector<MaybeLabel> out(static_cast<std::size_t>(t.n()));
  for (VertexId u : t.order) {
    if (u == t.root) continue;
    out[u] = out[t.parent[u]];
    if (partner[u] != kNoVertex)
      offer(out[u], make_label(CutKind::Incomp2, t, ctx.tree_id, u, partner[u], lambda), lambda);
  }
  return out;
}

// state after the local update at v, recorded for inspection
struct IncomparableStep {
  VertexId top = kNoVertex;
  VertexId v = kNoVertex;
  std::vector<VertexId> witnesses;
  std::vector<std::pair<EdgeId, VertexId>> pending;  // edge and its endpoint outside top↓
};

// smallest incomparable mincut containing each edge
inline std::vector<MaybeLabel> incomparable_edge_labels(const TreeContext& ctx, const std::vector<MaybeLabel>& by_vertex,
                                                        Wide lambda, std::vector<IncomparableStep>* trace = nullptr) {
  const RootedSpanningTree& t = *ctx.t;
  const WeightedGraph& g = *ctx.g;
  const EdgeId m = g.m();
  std::vector<MaybeLabel> out(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) out[e] = by_vertex[ctx.edge_lca[e]];

  DynForest f = incomparable_forest(ctx);
  PathLog log;
  std::multimap<int, std::pair<EdgeId, VertexId>> pending;
  std::vector<VertexId> witnesses;
  for (const auto& path : ctx.pd.paths) {
    const VertexId top = path.back();
    const VertexId above = t.parent[top];
    if (above == kNoVertex) continue;

    f.cut_parent(top);
    log.add(f, above, ForestValue::infinity());
    ForestValue best = f.min_tree(above, TreeTie::LargestSubtree).value;
    f.link(top, above);
    witnesses.clear();
    pending.clear();

    VertexId prev = kNoVertex;
    for (VertexId vi : path) {
      log.add(f, vi, ForestValue::infinity());
      for_each_new_vertex(t, vi, prev, [&](VertexId v) {
        auto [b, end] = g.incident(v);
        for (const EdgeId* it = b; it != end; ++it) {
          const Edge& ed = g.edge(*it);
          if (ed.u == ed.v || ed.w == 0) continue;
          VertexId u = g.other(*it, v);
          if (t.is_ancestor(top, u)) continue;
          pending.emplace(t.pre[u], std::make_pair(*it, u));
          log.add(f, u, ForestValue::finite(-2 * static_cast<Wide>(ed.w)));
          ForestMin h = f.min_path(u, PathTie::Highest);
          if (h.value < best) {
            best = h.value;
            witnesses.clear();
          }
          if (h.value == best) witnesses.push_back(h.vertex);
        }
      });
      prev = vi;
      if (trace) {
        IncomparableStep step{top, vi, witnesses, {}};
        for (const auto& [key, item] : pending) step.pending.push_back(item);
        trace->push_back(std::move(step));
      }

      if (best.is_inf() || ctx.c1[vi] + best.fin != lambda) continue;
      for (VertexId w : witnesses) {
        auto lo = pending.lower_bound(t.pre[w]);
        auto hi = pending.lower_bound(t.pre[w] + t.size[w]);
        for (auto it = lo; it != hi; ++it) {
          auto [e, u] = it->second;
          ForestMin low = f.min_path(u, PathTie::Lowest);
          offer(out[e], make_label(CutKind::Incomp2, t, ctx.tree_id, vi, low.vertex, lambda), lambda);
        }
        pending.erase(lo, hi);
      }
      witnesses.clear();
    }
    log.rollback(f);
  }
  return out;
}

inline std::vector<MaybeLabel> incomparable_labels(const TreeContext& ctx, const std::vector<VertexId>& partner,
                                                   Wide lambda) {
  return incomparable_edge_labels(ctx, incomparable_vertex_labels(ctx, partner, lambda), lambda);
}

}  // namespace cactusvine

#endif  // CACTUSVINE_INCOMPARABLE_HPP
