#ifndef CACTUSVINE_LABELS_HPP
#define CACTUSVINE_LABELS_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cactusvine/graph.hpp"
#include "cactusvine/rooted_tree.hpp"

namespace cactusvine {

enum class CutKind { Type1 = 0, Comp2 = 1, Incomp2 = 2 };

inline const char* to_string(CutKind k) {
  switch (k) {
    case CutKind::Type1: return "type1";
    case CutKind::Comp2: return "comp2";
    case CutKind::Incomp2: return "incomp2";
  }
  return "?";
}

// type1: v↓; comp2: v↓ \ w↓ with w below v; incomp2: v↓ ∪ w↓ with v ⊥ w
struct CutLabel {
  CutKind kind = CutKind::Type1;
  VertexId v = kNoVertex;
  VertexId w = kNoVertex;
  int tree = 0;
  std::int64_t size = 0;
  Wide weight = 0;

  friend bool operator==(const CutLabel& a, const CutLabel& b) {
    return a.kind == b.kind && a.v == b.v && a.w == b.w && a.tree == b.tree;
  }
};

using MaybeLabel = std::optional<CutLabel>;

inline std::int64_t label_size(CutKind kind, const RootedSpanningTree& t, VertexId v, VertexId w) {
  switch (kind) {
    case CutKind::Type1: return t.size[v];
    case CutKind::Comp2: return t.size[v] - t.size[w];
    case CutKind::Incomp2: return t.size[v] + t.size[w];
  }
  return 0;
}

inline CutLabel make_label(CutKind kind, const RootedSpanningTree& t, int tree, VertexId v, VertexId w, Wide weight) {
  return CutLabel{kind, v, w, tree, label_size(kind, t, v, w), weight};
}

inline bool label_contains(const CutLabel& l, const RootedSpanningTree& t, VertexId x) {
  switch (l.kind) {
    case CutKind::Type1: return t.is_ancestor(l.v, x);
    case CutKind::Comp2: return t.is_ancestor(l.v, x) && !t.is_ancestor(l.w, x);
    case CutKind::Incomp2: return t.is_ancestor(l.v, x) || t.is_ancestor(l.w, x);
  }
  return false;
}

inline CutSet materialize(const CutLabel& l, const RootedSpanningTree& t) {
  std::vector<VertexId> members;
  members.reserve(static_cast<std::size_t>(l.size));
  for (const VertexId* it = t.subtree_begin(l.v); it != t.subtree_end(l.v); ++it)
    if (l.kind != CutKind::Comp2 || !t.is_ancestor(l.w, *it)) members.push_back(*it);
  if (l.kind == CutKind::Incomp2)
    for (const VertexId* it = t.subtree_begin(l.w); it != t.subtree_end(l.w); ++it) members.push_back(*it);
  return CutSet(t.n(), std::move(members));
}

inline Wide label_weight(const CutLabel& l, const WeightedGraph& g, const RootedSpanningTree& t) {
  std::vector<char> side(static_cast<std::size_t>(g.n()), 0);
  for (VertexId x = 0; x < g.n(); ++x) side[x] = label_contains(l, t, x) ? 1 : 0;
  return cut_weight(g, side);
}

enum class LabelQuery { Size, Contains, Weight };

// one entry point for the three queries; x is only read for Contains
inline Wide label_query(const CutLabel& l, LabelQuery q, const WeightedGraph& g, const RootedSpanningTree& t,
                        VertexId x = kNoVertex) {
  switch (q) {
    case LabelQuery::Size: return l.size;
    case LabelQuery::Contains: return label_contains(l, t, x) ? 1 : 0;
    case LabelQuery::Weight: return label_weight(l, g, t);
  }
  return 0;
}

inline bool label_order_less(const CutLabel& a, const CutLabel& b) {
  return std::make_tuple(a.size, static_cast<int>(a.kind), a.tree, a.v, a.w) <
         std::make_tuple(b.size, static_cast<int>(b.kind), b.tree, b.v, b.w);
}

// keeps candidates of weight λ and returns the smallest under (size, kind, tree, v, w)
inline MaybeLabel combine_candidates(const std::vector<CutLabel>& candidates, Wide lambda) {
  MaybeLabel best;
  for (const CutLabel& c : candidates) {
    if (c.weight != lambda) continue;
    if (!best || label_order_less(c, *best)) best = c;
  }
  return best;
}

inline void offer(MaybeLabel& slot, const MaybeLabel& c, Wide lambda) {
  if (!c || c->weight != lambda) return;
  if (!slot || label_order_less(*c, *slot)) slot = c;
}

}  // namespace cactusvine

#endif  // CACTUSVINE_LABELS_HPP
