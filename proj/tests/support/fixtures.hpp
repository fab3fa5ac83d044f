#ifndef CACTUSVINE_TESTS_FIXTURES_HPP
#define CACTUSVINE_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "cactusvine/graph.hpp"
#include "cactusvine/rooted_tree.hpp"

namespace cactusvine::testing {

// vertex names a,b,c,d map to 0,1,2,3
inline constexpr VertexId A = 0, B = 1, C = 2, D = 3;

// unit 4-cycle a-b-c-d, root a; edges: 0=(a,b) 1=(b,c) 2=(c,d) 3=(d,a)
inline WeightedGraph g1() { return WeightedGraph(4, {{A, B, 1}, {B, C, 1}, {C, D, 1}, {D, A, 1}}, A); }

// unit triangle; edges: 0=(a,b) 1=(b,c) 2=(a,c)
inline WeightedGraph g_tri() { return WeightedGraph(3, {{A, B, 1}, {B, C, 1}, {A, C, 1}}, A); }

inline WeightedGraph g_pair() { return WeightedGraph(2, {{A, B, 5}}, A); }

inline WeightedGraph p3() { return WeightedGraph(3, {{A, B, 1}, {B, C, 1}}, A); }

inline WeightedGraph weighted_path() { return WeightedGraph(3, {{A, B, 2}, {B, C, 2}}, A); }

inline RootedSpanningTree t_path(const WeightedGraph& g) { return build_rooted_tree(g, {0, 1, 2}, A); }
inline RootedSpanningTree t_branch(const WeightedGraph& g) { return build_rooted_tree(g, {0, 1, 3}, A); }

inline WeightedGraph cycle_graph(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % n), 1});
  return WeightedGraph(n, std::move(edges), 0);
}

inline WeightedGraph complete_graph(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j, 1});
  return WeightedGraph(n, std::move(edges), 0);
}

// connected multigraph: random spanning tree plus extra random edges
inline WeightedGraph random_connected_graph(std::mt19937_64& rng, VertexId n, int m, Weight max_w) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<Weight> wd(1, max_w);
  for (VertexId v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexId> pd(0, v - 1);
    edges.push_back({pd(rng), v, wd(rng)});
  }
  std::uniform_int_distribution<VertexId> vd(0, n - 1);
  while (static_cast<int>(edges.size()) < m) {
    VertexId a = vd(rng), b = vd(rng);
    if (a == b) continue;
    edges.push_back({a, b, wd(rng)});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  // relabel so the root is not always the tree's first vertex
  std::vector<VertexId> perm(n);
  for (VertexId i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Edge& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return WeightedGraph(n, std::move(edges), 0);
}

// small random corpus: n in [3,12], m <= 3n, weights 1..8
inline std::vector<WeightedGraph> small_corpus(std::uint64_t seed, int count, VertexId min_n = 3, VertexId max_n = 12) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedGraph> out;
  for (int i = 0; i < count; ++i) {
    VertexId n = std::uniform_int_distribution<VertexId>(min_n, max_n)(rng);
    int m = std::uniform_int_distribution<int>(n - 1, 3 * n)(rng);
    Weight maxw = (i % 4 == 0) ? 1 : ((i % 4 == 1) ? 2 : 8);
    out.push_back(random_connected_graph(rng, n, m, maxw));
  }
  return out;
}

// λ = 2 with many mincuts: clusters joined in a random cactus of unit cycles and weight-2 bridges
inline WeightedGraph random_cactus_graph(std::mt19937_64& rng, VertexId max_n) {
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> clusters;
  VertexId n = 0;
  auto new_cluster = [&]() {
    int size = std::uniform_int_distribution<int>(1, 2)(rng);
    std::vector<VertexId> c;
    for (int i = 0; i < size; ++i) c.push_back(n++);
    if (size == 2) edges.push_back({c[0], c[1], 3});
    clusters.push_back(c);
    return static_cast<int>(clusters.size()) - 1;
  };
  auto pick = [&](int k) {
    const auto& c = clusters[k];
    return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
  };
  new_cluster();
  while (n + 2 <= max_n) {
    int at = std::uniform_int_distribution<int>(0, static_cast<int>(clusters.size()) - 1)(rng);
    int len = std::uniform_int_distribution<int>(1, 4)(rng);
    if (len == 1) {
      int c = new_cluster();
      edges.push_back({pick(at), pick(c), 2});
      continue;
    }
    int prev = at;
    for (int i = 0; i < len && n + 2 <= max_n; ++i) {
      int c = new_cluster();
      edges.push_back({pick(prev), pick(c), 1});
      prev = c;
    }
    edges.push_back({pick(prev), pick(at), 1});
  }
  std::vector<VertexId> perm(n);
  for (VertexId i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Edge& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return WeightedGraph(n, std::move(edges), 0);
}

inline RootedSpanningTree random_spanning_tree(const WeightedGraph& g, std::mt19937_64& rng) {
  std::vector<EdgeId> ids(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) ids[e] = e;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<VertexId> dsu(g.n());
  for (VertexId v = 0; v < g.n(); ++v) dsu[v] = v;
  auto find = [&](VertexId x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  std::vector<EdgeId> chosen;
  for (EdgeId e : ids) {
    VertexId a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) continue;
    dsu[a] = b;
    chosen.push_back(e);
  }
  return build_rooted_tree(g, chosen, g.root());
}

}  // namespace cactusvine::testing

#endif  // CACTUSVINE_TESTS_FIXTURES_HPP
