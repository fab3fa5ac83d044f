#ifndef CACTUSVINE_TREE_PACKING_HPP
#define CACTUSVINE_TREE_PACKING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cactusvine/error.hpp"
#include "cactusvine/graph.hpp"
#include "cactusvine/oracle.hpp"
#include "cactusvine/rooted_tree.hpp"

namespace cactusvine {

enum class PackingStrategy { Greedy, Exhaustive };

inline const char* to_string(PackingStrategy s) { return s == PackingStrategy::Greedy ? "greedy" : "exhaustive"; }

struct TreePacking {
  std::vector<RootedSpanningTree> trees;
  PackingStrategy strategy = PackingStrategy::Greedy;
  std::uint64_t seed = 0;
};

inline constexpr VertexId kExhaustiveMaxVertices = 20;

inline int default_rounds(VertexId n) { return std::max(1, static_cast<int>(std::ceil(3.0 * std::log(std::max<VertexId>(n, 2))))); }

inline int respects_count(const RootedSpanningTree& t, const CutSet& s) {
  int count = 0;
  for (VertexId v = 0; v < t.n(); ++v)
    if (t.parent[v] != kNoVertex && s.contains(v) != s.contains(t.parent[v])) ++count;
  return count;
}

struct PackingCheck {
  bool ok = true;
  std::optional<CutSet> first_violation;
};

inline PackingCheck verify_packing(const TreePacking& p, const std::vector<CutSet>& mincuts) {
  for (const CutSet& s : mincuts) {
    bool covered = std::any_of(p.trees.begin(), p.trees.end(), [&](const auto& t) { return respects_count(t, s) <= 2; });
    if (!covered) return {false, s};
  }
  return {};
}

namespace detail {

class Dsu {
 public:
  explicit Dsu(VertexId n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  VertexId find(VertexId x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // union by size without path compression so it can be undone
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    VertexId b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<VertexId> size_;
  std::vector<VertexId> history_;
};

inline std::vector<EdgeId> sorted_ids(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

// spanning tree of g[side] grown by BFS from start over edges in id order
inline void bfs_side(const WeightedGraph& g, const std::vector<char>& in_side, VertexId start, std::vector<char>& seen,
                     std::vector<EdgeId>& chosen) {
  std::vector<VertexId> queue{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId x = queue[i];
    std::vector<EdgeId> inc(g.incident(x).first, g.incident(x).second);
    std::sort(inc.begin(), inc.end());
    for (EdgeId e : inc) {
      VertexId y = g.other(e, x);
      if (seen[y] || in_side[y] != in_side[x]) continue;
      seen[y] = 1;
      chosen.push_back(e);
      queue.push_back(y);
    }
  }
}

// a tree crossing s exactly once; both sides of a mincut are connected
inline std::optional<std::vector<EdgeId>> one_respecting_tree(const WeightedGraph& g, const CutSet& s) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<EdgeId> chosen;
  bfs_side(g, s.mask(), g.root(), seen, chosen);
  bfs_side(g, s.mask(), s.members().front(), seen, chosen);
  EdgeId bridge = -1;
  for (EdgeId e = 0; e < g.m() && bridge < 0; ++e)
    if (s.contains(g.edge(e).u) != s.contains(g.edge(e).v)) bridge = e;
  if (bridge < 0) return std::nullopt;
  chosen.push_back(bridge);
  if (static_cast<VertexId>(chosen.size()) != g.n() - 1) return std::nullopt;
  return sorted_ids(std::move(chosen));
}

inline void enumerate_spanning_trees(const WeightedGraph& g, std::size_t cap, std::vector<std::vector<EdgeId>>& out) {
  Dsu dsu(g.n());
  std::vector<EdgeId> chosen;
  std::size_t budget = 200000;
  const VertexId need = g.n() - 1;
  auto rec = [&](auto&& self, EdgeId e) -> void {
    if (out.size() >= cap || budget == 0) return;
    --budget;
    if (static_cast<VertexId>(chosen.size()) == need) {
      out.push_back(chosen);
      return;
    }
    if (g.m() - e < need - static_cast<VertexId>(chosen.size())) return;
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) {
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      dsu.undo();
    }
    self(self, e + 1);
  };
  rec(rec, 0);
}

}  // namespace detail

// multiplicative-weights packing: repeated minimum spanning trees under growing edge loads
inline TreePacking greedy_packing(const WeightedGraph& g, int rounds, std::uint64_t seed) {
  if (rounds <= 0) rounds = default_rounds(g.n());
  TreePacking p;
  p.strategy = PackingStrategy::Greedy;
  p.seed = seed;
  std::mt19937_64 rng(seed);
  const EdgeId m = g.m();
  std::vector<double> load(static_cast<std::size_t>(m), 0.0);
  std::set<std::vector<EdgeId>> seen;
  std::vector<EdgeId> order(static_cast<std::size_t>(m));
  for (int round = 0; round < rounds; ++round) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return load[a] < load[b]; });
    detail::Dsu dsu(g.n());
    std::vector<EdgeId> chosen;
    chosen.reserve(static_cast<std::size_t>(g.n()) - 1);
    for (EdgeId e : order) {
      if (!dsu.unite(g.edge(e).u, g.edge(e).v)) continue;
      chosen.push_back(e);
      if (static_cast<VertexId>(chosen.size()) == g.n() - 1) break;
    }
    for (EdgeId e : chosen) load[e] += 1.0 / static_cast<double>(g.edge(e).w);
    std::sort(chosen.begin(), chosen.end());
    if (!seen.insert(chosen).second) continue;
    p.trees.push_back(build_rooted_tree(g, chosen, g.root()));
  }
  return p;
}

// small-graph packing checked against the oracle: candidate trees then greedy set cover of all mincuts
inline TreePacking exhaustive_packing(const WeightedGraph& g) {
  if (g.n() > kExhaustiveMaxVertices)
    throw Error(ErrorCode::PackingUnverifiable, "exhaustive packing supports at most 20 vertices");
  MincutInventory inv = brute_mincuts(g);
  std::vector<std::vector<EdgeId>> candidates;
  detail::enumerate_spanning_trees(g, 256, candidates);
  for (const CutSet& s : inv.all_mincuts)
    if (auto t = detail::one_respecting_tree(g, s)) candidates.push_back(std::move(*t));
  std::set<std::vector<EdgeId>> unique_ids(candidates.begin(), candidates.end());
  std::vector<RootedSpanningTree> pool;
  for (const auto& ids : unique_ids) pool.push_back(build_rooted_tree(g, ids, g.root()));

  const std::size_t k = inv.all_mincuts.size();
  std::vector<std::vector<std::size_t>> covers(pool.size());
  for (std::size_t t = 0; t < pool.size(); ++t)
    for (std::size_t c = 0; c < k; ++c)
      if (respects_count(pool[t], inv.all_mincuts[c]) <= 2) covers[t].push_back(c);

  TreePacking p;
  p.strategy = PackingStrategy::Exhaustive;
  std::vector<char> covered(k, 0);
  std::size_t remaining = k;
  std::vector<char> used(pool.size(), 0);
  while (remaining > 0) {
    std::size_t best = pool.size(), best_gain = 0;
    for (std::size_t t = 0; t < pool.size(); ++t) {
      if (used[t]) continue;
      std::size_t gain = 0;
      for (std::size_t c : covers[t]) gain += covered[c] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = t;
      }
    }
    if (best == pool.size()) throw Error(ErrorCode::PackingUnverifiable, "no candidate tree covers a mincut");
    used[best] = 1;
    for (std::size_t c : covers[best])
      if (!covered[c]) {
        covered[c] = 1;
        --remaining;
      }
    p.trees.push_back(pool[best]);
  }
  return p;
}

inline TreePacking pack_trees(const WeightedGraph& g, PackingStrategy strategy, int rounds, std::uint64_t seed) {
  return strategy == PackingStrategy::Exhaustive ? exhaustive_packing(g) : greedy_packing(g, rounds, seed);
}

}  // namespace cactusvine

#endif  // CACTUSVINE_TREE_PACKING_HPP
