#ifndef CACTUSVINE_ORACLE_HPP
#define CACTUSVINE_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cactusvine/error.hpp"
#include "cactusvine/graph.hpp"

namespace cactusvine {

inline constexpr VertexId kOracleMaxVertices = 20;

struct MincutInventory {
  Wide lambda = 0;
  std::vector<CutSet> all_mincuts;  // sorted
  std::vector<std::optional<CutSet>> minimal_by_vertex;
  std::vector<std::optional<CutSet>> minimal_by_edge;
};

namespace detail {

inline std::optional<CutSet> unique_smallest(const std::vector<const CutSet*>& containing) {
  const CutSet* best = nullptr;
  bool tie = false;
  for (const CutSet* c : containing) {
    if (!best || c->size() < best->size()) {
      best = c;
      tie = false;
    } else if (c->size() == best->size()) {
      tie = true;
    }
  }
  if (!best) return std::nullopt;
  if (tie) throw Error(ErrorCode::AlgorithmInvariantViolation, "two smallest mincuts contain the same item");
  return *best;
}

}  // namespace detail

// every subset excluding the root, walked in Gray-code order with incremental boundary updates
inline MincutInventory brute_mincuts(const WeightedGraph& g) {
  const VertexId n = g.n();
  if (n > kOracleMaxVertices) throw Error(ErrorCode::TooLarge, "oracle supports at most 20 vertices");
  std::vector<VertexId> free_vertices;
  for (VertexId v = 0; v < n; ++v)
    if (v != g.root()) free_vertices.push_back(v);
  const int k = static_cast<int>(free_vertices.size());

  std::vector<char> side(static_cast<std::size_t>(n), 0);
  Wide current = 0, best = std::numeric_limits<Wide>::max();
  std::uint32_t gray = 0;
  std::vector<std::uint32_t> hits;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    int bit = std::countr_zero(i);
    VertexId x = free_vertices[bit];
    auto [b, e] = g.incident(x);
    for (const EdgeId* it = b; it != e; ++it) {
      VertexId y = g.other(*it, x);
      if (y == x) continue;
      current += side[y] == side[x] ? g.edge(*it).w : -static_cast<Wide>(g.edge(*it).w);
    }
    side[x] ^= 1;
    gray ^= std::uint32_t{1} << bit;
    if (current < best) {
      best = current;
      hits.clear();
    }
    if (current == best) hits.push_back(gray);
  }

  MincutInventory inv;
  inv.lambda = best;
  for (std::uint32_t mask : hits) {
    std::vector<VertexId> members;
    for (int j = 0; j < k; ++j)
      if (mask >> j & 1) members.push_back(free_vertices[j]);
    std::sort(members.begin(), members.end());
    inv.all_mincuts.emplace_back(n, std::move(members));
  }
  std::sort(inv.all_mincuts.begin(), inv.all_mincuts.end());

  inv.minimal_by_vertex.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    std::vector<const CutSet*> containing;
    for (const CutSet& c : inv.all_mincuts)
      if (c.contains(v)) containing.push_back(&c);
    inv.minimal_by_vertex[v] = detail::unique_smallest(containing);
  }
  inv.minimal_by_edge.resize(static_cast<std::size_t>(g.m()));
  for (EdgeId e = 0; e < g.m(); ++e) {
    std::vector<const CutSet*> containing;
    for (const CutSet& c : inv.all_mincuts)
      if (c.contains(g.edge(e).u) && c.contains(g.edge(e).v)) containing.push_back(&c);
    inv.minimal_by_edge[e] = detail::unique_smallest(containing);
  }
  return inv;
}

// for every crossing pair X, Y: X∩Y, X∪Y, X\Y, Y\X are mincuts and C(X∩Y, V\(X∪Y)) = C(X\Y, Y\X) = 0
inline int crossing_violations(const WeightedGraph& g, const MincutInventory& inv) {
  const VertexId n = g.n();
  auto is_mincut = [&](const std::vector<char>& mask) {
    return std::binary_search(inv.all_mincuts.begin(), inv.all_mincuts.end(), CutSet::from_mask(mask));
  };
  int violations = 0;
  std::vector<char> i(n), u(n), xy(n), yx(n), out(n);
  for (std::size_t a = 0; a < inv.all_mincuts.size(); ++a) {
    for (std::size_t b = a + 1; b < inv.all_mincuts.size(); ++b) {
      const CutSet& x = inv.all_mincuts[a];
      const CutSet& y = inv.all_mincuts[b];
      bool inter = false, only_x = false, only_y = false;
      for (VertexId v = 0; v < n; ++v) {
        bool in_x = x.contains(v), in_y = y.contains(v);
        i[v] = in_x && in_y;
        u[v] = in_x || in_y;
        xy[v] = in_x && !in_y;
        yx[v] = in_y && !in_x;
        out[v] = !u[v];
        inter |= i[v] != 0;
        only_x |= xy[v] != 0;
        only_y |= yx[v] != 0;
      }
      // the root lies outside both, so X∪Y is always proper
      if (!inter || !only_x || !only_y) continue;
      if (!is_mincut(i) || !is_mincut(u) || !is_mincut(xy) || !is_mincut(yx)) ++violations;
      if (cross_weight(g, i, out) != 0 || cross_weight(g, xy, yx) != 0) ++violations;
    }
  }
  return violations;
}

}  // namespace cactusvine

#endif  // CACTUSVINE_ORACLE_HPP
