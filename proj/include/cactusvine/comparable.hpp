#ifndef CACTUSVINE_COMPARABLE_HPP
#define CACTUSVINE_COMPARABLE_HPP

#include <vector>

#include "cactusvine/dyn_forest.hpp"
#include "cactusvine/labels.hpp"
#include "cactusvine/respect1.hpp"
#include "cactusvine/tree_context.hpp"

namespace cactusvine {

// forest over T with value C(w↓) at w and INF at the root
inline DynForest comparable_forest(const TreeContext& ctx) {
  const RootedSpanningTree& t = *ctx.t;
  std::vector<ForestValue> init(static_cast<std::size_t>(t.n()));
  for (VertexId w = 0; w < t.n(); ++w) init[w] = ForestValue::finite(ctx.c1[w]);
  init[t.root] = ForestValue::infinity();
  return DynForest(t, init);
}

// visits every v with the forest holding C(w↓) + 2C(v↓, w↓) at each w
template <class OnVertex>
void comparable_sweep(const TreeContext& ctx, DynForest& f, OnVertex&& on_vertex) {
  const RootedSpanningTree& t = *ctx.t;
  const WeightedGraph& g = *ctx.g;
  PathLog log;
  for (const auto& path : ctx.pd.paths) {
    VertexId prev = kNoVertex;
    for (VertexId v : path) {
      for_each_new_vertex(t, v, prev, [&](VertexId u) {
        auto [b, e] = g.incident(u);
        for (const EdgeId* it = b; it != e; ++it) {
          const Edge& ed = g.edge(*it);
          if (ed.u == ed.v || ed.w == 0) continue;
          log.add(f, g.other(*it, u), ForestValue::finite(2 * static_cast<Wide>(ed.w)));
        }
      });
      on_vertex(v);
      prev = v;
    }
    log.rollback(f);
  }
}

struct PartnerTable {
  std::vector<VertexId> partner;
  std::vector<Wide> cut;  // kWideMax when there is no partner

  Wide minimum() const {
    Wide best = kWideMax;
    for (Wide c : cut) best = std::min(best, c);
    return best;
  }

  std::vector<VertexId> accepted(Wide lambda) const {
    std::vector<VertexId> out(partner.size(), kNoVertex);
    for (std::size_t v = 0; v < partner.size(); ++v)
      if (cut[v] == lambda) out[v] = partner[v];
    return out;
  }
};

// per v, the highest w above v minimizing C(w↓ \ v↓)
inline PartnerTable highest_partner_minima(const TreeContext& ctx) {
  const RootedSpanningTree& t = *ctx.t;
  PartnerTable out{std::vector<VertexId>(static_cast<std::size_t>(t.n()), kNoVertex),
                   std::vector<Wide>(static_cast<std::size_t>(t.n()), kWideMax)};
  DynForest f = comparable_forest(ctx);
  comparable_sweep(ctx, f, [&](VertexId v) {
    VertexId p = t.parent[v];
    if (p == kNoVertex) return;
    ForestMin m = f.min_path(p, PathTie::Highest);
    if (m.value.is_inf()) return;
    out.partner[v] = m.vertex;
    out.cut[v] = ctx.comparable_cut(v, m.value);
  });
  return out;
}

struct LowerVertices {
  std::vector<VertexId> lower;  // per edge
  std::vector<int> event;       // resolution event per edge, -1 if unresolved
};

// lower endpoint of the smallest comparable mincut containing each edge, for edges where one exists
inline LowerVertices compute_lower_vertices(const TreeContext& ctx, const std::vector<VertexId>& highest) {
  const RootedSpanningTree& t = *ctx.t;
  const WeightedGraph& g = *ctx.g;
  const VertexId n = t.n();
  const EdgeId m = g.m();
  LowerVertices out{std::vector<VertexId>(static_cast<std::size_t>(m), kNoVertex),
                    std::vector<int>(static_cast<std::size_t>(m), -1)};

  std::vector<std::vector<VertexId>> deactivate(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v)
    if (highest[v] != kNoVertex && t.parent[highest[v]] != kNoVertex) deactivate[t.parent[highest[v]]].push_back(v);

  std::vector<int> by_lca_begin(static_cast<std::size_t>(n) + 1, 0);
  for (EdgeId e = 0; e < m; ++e) ++by_lca_begin[ctx.edge_lca[e] + 1];
  for (VertexId v = 0; v < n; ++v) by_lca_begin[v + 1] += by_lca_begin[v];
  std::vector<EdgeId> by_lca(static_cast<std::size_t>(m));
  {
    std::vector<int> fill(by_lca_begin.begin(), by_lca_begin.end() - 1);
    for (EdgeId e = 0; e < m; ++e) by_lca[fill[ctx.edge_lca[e]]++] = e;
  }

  std::vector<ForestValue> init(static_cast<std::size_t>(n), ForestValue::infinity());
  DynForest f(t, init);

  // unresolved edges travel upward as linked lists
  struct Package {
    EdgeId head = -1, tail = -1;
  };
  std::vector<EdgeId> next(static_cast<std::size_t>(m), -1);
  std::vector<Package> passed(static_cast<std::size_t>(n));
  auto append = [&](Package& p, EdgeId e) {
    next[e] = -1;
    if (p.head < 0) p.head = e;
    else next[p.tail] = e;
    p.tail = e;
  };
  auto concat = [&](Package& p, const Package& q) {
    if (q.head < 0) return;
    if (p.head < 0) p = q;
    else {
      next[p.tail] = q.head;
      p.tail = q.tail;
    }
  };

  std::vector<VertexId> postorder(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) postorder[t.post[v]] = v;

  int events = 0;
  for (VertexId u : postorder) {
    for (const VertexId* c = t.children_begin(u); c != t.children_end(u); ++c)
      if (highest[*c] != kNoVertex) f.set_value(*c, ForestValue::finite(t.depth[*c]));
    for (VertexId v : deactivate[u]) f.set_value(v, ForestValue::infinity());
    const bool detached = t.parent[u] != kNoVertex;
    if (detached) f.cut_parent(u);

    Package up;
    for (int i = by_lca_begin[u]; i < by_lca_begin[u + 1]; ++i) {
      EdgeId e = by_lca[i];
      const Edge& ed = g.edge(e);
      std::optional<ForestMin> r = f.min_non_path(ed.u, ed.v);
      if (r && !r->value.is_inf()) {
        out.lower[e] = r->vertex;
        out.event[e] = events++;
      } else {
        append(up, e);
      }
    }
    for (const VertexId* c = t.children_begin(u); c != t.children_end(u); ++c) {
      const Package pkg = passed[*c];
      if (pkg.head < 0) continue;
      f.cut_parent(*c);
      ForestMin r = f.min_tree(u, TreeTie::LargestSubtree);
      f.link(*c, u);
      if (r.value.is_inf()) {
        concat(up, pkg);
        continue;
      }
      int id = events++;
      for (EdgeId e = pkg.head; e >= 0; e = next[e]) {
        out.lower[e] = r.vertex;
        out.event[e] = id;
      }
    }
    if (detached) f.link(u, t.parent[u]);
    passed[u] = up;
  }
  return out;
}

// pairs each lower vertex with its upper vertex during a second sweep
inline std::vector<MaybeLabel> comparable_labels_from_lower(const TreeContext& ctx, const LowerVertices& low,
                                                            Wide lambda) {
  const RootedSpanningTree& t = *ctx.t;
  const WeightedGraph& g = *ctx.g;
  const VertexId n = t.n();
  const EdgeId m = g.m();
  std::vector<std::vector<EdgeId>> queue(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < m; ++e)
    if (low.lower[e] != kNoVertex) queue[low.lower[e]].push_back(e);

  std::vector<MaybeLabel> out(static_cast<std::size_t>(m));
  DynForest f = comparable_forest(ctx);
  comparable_sweep(ctx, f, [&](VertexId v) {
    for (EdgeId e : queue[v]) {
      VertexId x = ctx.lca.lca(v, ctx.edge_lca[e]);
      if (x == v) continue;
      ForestMin r = f.min_path(x, PathTie::Lowest);
      if (r.value.is_inf() || ctx.comparable_cut(v, r.value) != lambda) continue;
      CutLabel l = make_label(CutKind::Comp2, t, ctx.tree_id, r.vertex, v, lambda);
      const Edge& ed = g.edge(e);
      if (!label_contains(l, t, ed.u) || !label_contains(l, t, ed.v)) continue;
      out[e] = l;
    }
  });
  return out;
}

inline std::vector<MaybeLabel> comparable_labels(const TreeContext& ctx, const std::vector<VertexId>& highest,
                                                 Wide lambda) {
  return comparable_labels_from_lower(ctx, compute_lower_vertices(ctx, highest), lambda);
}

}  // namespace cactusvine

#endif  // CACTUSVINE_COMPARABLE_HPP
