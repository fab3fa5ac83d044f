#ifndef CACTUSVINE_ROOTED_TREE_HPP
#define CACTUSVINE_ROOTED_TREE_HPP

#include <algorithm>
#include <bit>
#include <vector>

#include "cactusvine/graph.hpp"

namespace cactusvine {

struct RootedSpanningTree {
  VertexId root = 0;
  std::vector<VertexId> parent;      // kNoVertex at the root
  std::vector<EdgeId> parent_edge;   // host edge to the parent
  std::vector<int> depth;
  std::vector<int> pre;              // preorder index
  std::vector<int> post;             // postorder index
  std::vector<int> size;             // |v↓|
  std::vector<VertexId> order;       // vertices in preorder
  std::vector<int> child_begin;      // children of v: children[child_begin[v] .. child_begin[v+1])
  std::vector<VertexId> children;    // sorted by id within a vertex
  std::vector<EdgeId> tree_edges;    // sorted

  VertexId n() const { return static_cast<VertexId>(parent.size()); }

  bool is_ancestor(VertexId a, VertexId d) const { return pre[a] <= pre[d] && pre[d] < pre[a] + size[a]; }

  bool comparable(VertexId a, VertexId b) const { return is_ancestor(a, b) || is_ancestor(b, a); }

  const VertexId* children_begin(VertexId v) const { return children.data() + child_begin[v]; }
  const VertexId* children_end(VertexId v) const { return children.data() + child_begin[v + 1]; }

  // vertices in v↓ are order[pre[v] .. pre[v]+size[v])
  const VertexId* subtree_begin(VertexId v) const { return order.data() + pre[v]; }
  const VertexId* subtree_end(VertexId v) const { return order.data() + pre[v] + size[v]; }
};

inline bool is_ancestor(const RootedSpanningTree& t, VertexId a, VertexId d) { return t.is_ancestor(a, d); }

inline RootedSpanningTree build_rooted_tree(const WeightedGraph& g, std::vector<EdgeId> tree_edges, VertexId root) {
  const VertexId n = g.n();
  if (root < 0 || root >= n) throw Error(ErrorCode::NotATree, "root out of range");
  if (static_cast<VertexId>(tree_edges.size()) != n - 1)
    throw Error(ErrorCode::NotATree, "a spanning tree needs n-1 edges");
  std::sort(tree_edges.begin(), tree_edges.end());
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (EdgeId e : tree_edges) {
    if (e < 0 || e >= g.m()) throw Error(ErrorCode::NotATree, "edge id out of range");
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) throw Error(ErrorCode::NotATree, "self-loop in tree");
    ++deg[ed.u + 1];
    ++deg[ed.v + 1];
  }
  for (VertexId v = 0; v < n; ++v) deg[v + 1] += deg[v];
  std::vector<EdgeId> inc(static_cast<std::size_t>(deg[n]));
  {
    std::vector<int> fill(deg.begin(), deg.end() - 1);
    for (EdgeId e : tree_edges) {
      inc[fill[g.edge(e).u]++] = e;
      inc[fill[g.edge(e).v]++] = e;
    }
  }
  RootedSpanningTree t;
  t.root = root;
  t.parent.assign(n, kNoVertex);
  t.parent_edge.assign(n, -1);
  t.depth.assign(n, 0);
  t.pre.assign(n, -1);
  t.post.assign(n, -1);
  t.size.assign(n, 1);
  t.order.reserve(n);
  t.tree_edges = std::move(tree_edges);

  // BFS for parents, then children lists sorted by id
  std::vector<VertexId> bfs{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    VertexId x = bfs[i];
    for (int k = deg[x]; k < deg[x + 1]; ++k) {
      EdgeId e = inc[k];
      VertexId y = g.other(e, x);
      if (y == t.parent[x] && e == t.parent_edge[x]) continue;
      if (seen[y]) throw Error(ErrorCode::NotATree, "tree edges contain a cycle");
      seen[y] = 1;
      t.parent[y] = x;
      t.parent_edge[y] = e;
      t.depth[y] = t.depth[x] + 1;
      bfs.push_back(y);
    }
  }
  if (static_cast<VertexId>(bfs.size()) != n) throw Error(ErrorCode::NotATree, "tree edges do not span the graph");

  t.child_begin.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    if (t.parent[v] != kNoVertex) ++t.child_begin[t.parent[v] + 1];
  for (VertexId v = 0; v < n; ++v) t.child_begin[v + 1] += t.child_begin[v];
  t.children.assign(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
  {
    std::vector<int> fill(t.child_begin.begin(), t.child_begin.end() - 1);
    for (VertexId v = 0; v < n; ++v)
      if (t.parent[v] != kNoVertex) t.children[fill[t.parent[v]]++] = v;
  }
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    if (t.parent[*it] != kNoVertex) t.size[t.parent[*it]] += t.size[*it];

  // iterative DFS for pre/post order
  struct Frame {
    VertexId v;
    int next;
  };
  std::vector<Frame> stack{{root, t.child_begin[root]}};
  int pre_counter = 0, post_counter = 0;
  t.pre[root] = pre_counter++;
  t.order.push_back(root);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < t.child_begin[f.v + 1]) {
      VertexId c = t.children[f.next++];
      t.pre[c] = pre_counter++;
      t.order.push_back(c);
      stack.push_back({c, t.child_begin[c]});
    } else {
      t.post[f.v] = post_counter++;
      stack.pop_back();
    }
  }
  return t;
}

// O(1) lca after O(n log n) preprocessing: range-min over preorder of parents
class LcaIndex {
 public:
  LcaIndex() = default;

  explicit LcaIndex(const RootedSpanningTree& t) : t_(&t) {
    const int n = static_cast<int>(t.n());
    levels_ = 1;
    while ((1 << levels_) <= n) ++levels_;
    table_.assign(static_cast<std::size_t>(levels_) * n, 0);
    for (int i = 0; i < n; ++i) table_[i] = t.order[i];
    for (int k = 1; k < levels_; ++k) {
      VertexId* cur = table_.data() + static_cast<std::size_t>(k) * n;
      const VertexId* prev = table_.data() + static_cast<std::size_t>(k - 1) * n;
      for (int i = 0; i + (1 << k) <= n; ++i) {
        VertexId a = prev[i], b = prev[i + (1 << (k - 1))];
        cur[i] = t.depth[a] <= t.depth[b] ? a : b;
      }
    }
  }

  VertexId lca(VertexId u, VertexId v) const {
    if (u == v) return u;
    const RootedSpanningTree& t = *t_;
    int a = t.pre[u], b = t.pre[v];
    if (a > b) std::swap(a, b);
    // min-depth vertex in order(a, b] is a child of the lca on the path to v
    int lo = a + 1, len = b - a;
    int k = std::bit_width(static_cast<unsigned>(len)) - 1;
    const int n = static_cast<int>(t.n());
    VertexId x = table_[static_cast<std::size_t>(k) * n + lo];
    VertexId y = table_[static_cast<std::size_t>(k) * n + b - (1 << k) + 1];
    VertexId m = t.depth[x] <= t.depth[y] ? x : y;
    return t.parent[m];
  }

 private:
  const RootedSpanningTree* t_ = nullptr;
  int levels_ = 0;
  std::vector<VertexId> table_;
};

inline VertexId lca(const RootedSpanningTree& t, VertexId u, VertexId v) {
  while (t.depth[u] > t.depth[v]) u = t.parent[u];
  while (t.depth[v] > t.depth[u]) v = t.parent[v];
  while (u != v) {
    u = t.parent[u];
    v = t.parent[v];
  }
  return u;
}

struct PathDecomposition {
  std::vector<std::vector<VertexId>> paths;  // each deepest-first; last vertex is the top
  std::vector<int> path_of;
  std::vector<int> index_in_path;

  VertexId top(int p) const { return paths[p].back(); }
};

inline PathDecomposition heavy_path_decomposition(const RootedSpanningTree& t) {
  const VertexId n = t.n();
  std::vector<VertexId> heavy(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    for (const VertexId* c = t.children_begin(v); c != t.children_end(v); ++c) {
      if (heavy[v] == kNoVertex || t.size[*c] > t.size[heavy[v]] ||
          (t.size[*c] == t.size[heavy[v]] && *c < heavy[v]))
        heavy[v] = *c;
    }
  }
  PathDecomposition pd;
  pd.path_of.assign(n, -1);
  pd.index_in_path.assign(n, -1);
  for (VertexId head : t.order) {
    if (t.parent[head] != kNoVertex && heavy[t.parent[head]] == head) continue;
    std::vector<VertexId> path;
    for (VertexId x = head; x != kNoVertex; x = heavy[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    int id = static_cast<int>(pd.paths.size());
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      pd.path_of[path[i]] = id;
      pd.index_in_path[path[i]] = i;
    }
    pd.paths.push_back(std::move(path));
  }
  return pd;
}

}  // namespace cactusvine

#endif  // CACTUSVINE_ROOTED_TREE_HPP
