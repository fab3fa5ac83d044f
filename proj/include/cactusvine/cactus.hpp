#ifndef CACTUSVINE_CACTUS_HPP
#define CACTUSVINE_CACTUS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cactusvine/error.hpp"
#include "cactusvine/graph.hpp"
#include "cactusvine/labels.hpp"
#include "cactusvine/pipeline.hpp"
#include "cactusvine/rooted_tree.hpp"
#include "cactusvine/tree_packing.hpp"

namespace cactusvine {

// cut identity: size plus a 128-bit sum of random per-vertex hashes
struct CutKey {
  std::int64_t size = 0;
  std::uint64_t h1 = 0, h2 = 0;
  auto operator<=>(const CutKey&) const = default;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// answers key, membership and materialization for labels of one packing
class LabelIndex {
 public:
  LabelIndex(const TreePacking& packing, VertexId n) : packing_(&packing) {
    std::uint64_t state = 0x5eed5eedULL;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
      a[v] = splitmix64(state);
      b[v] = splitmix64(state);
    }
    for (const RootedSpanningTree& t : packing.trees) {
      std::vector<std::uint64_t> s1(a), s2(b);
      for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        VertexId p = t.parent[*it];
        if (p == kNoVertex) continue;
        s1[p] += s1[*it];
        s2[p] += s2[*it];
      }
      sum1_.push_back(std::move(s1));
      sum2_.push_back(std::move(s2));
    }
  }

  const RootedSpanningTree& tree(const CutLabel& l) const { return packing_->trees[l.tree]; }

  CutKey key(const CutLabel& l) const {
    const auto& s1 = sum1_[l.tree];
    const auto& s2 = sum2_[l.tree];
    CutKey k{l.size, s1[l.v], s2[l.v]};
    if (l.kind == CutKind::Comp2) {
      k.h1 -= s1[l.w];
      k.h2 -= s2[l.w];
    } else if (l.kind == CutKind::Incomp2) {
      k.h1 += s1[l.w];
      k.h2 += s2[l.w];
    }
    return k;
  }

  bool contains(const CutLabel& l, VertexId x) const { return label_contains(l, tree(l), x); }
  CutSet materialize(const CutLabel& l) const { return cactusvine::materialize(l, tree(l)); }

 private:
  const TreePacking* packing_;
  std::vector<std::vector<std::uint64_t>> sum1_, sum2_;
};

// vertices sharing a minimal mincut form one class; vertices without one join the root's class
struct VertexClasses {
  std::vector<int> class_of;
  std::vector<VertexId> rep;
  std::vector<std::int64_t> weight;
  std::vector<MaybeLabel> label;
  std::vector<CutKey> key;
  int root_class = 0;

  int count() const { return static_cast<int>(rep.size()); }
};

inline constexpr std::int64_t kExactCheckBudget = 4000000;

inline VertexClasses classify_vertices(const WeightedGraph& g, const ItemLabels& labels, const LabelIndex& index) {
  const VertexId n = g.n();
  VertexClasses vc;
  vc.class_of.assign(static_cast<std::size_t>(n), -1);
  vc.rep.push_back(g.root());
  vc.weight.push_back(0);
  vc.label.emplace_back();
  vc.key.emplace_back();
  std::vector<std::pair<CutKey, VertexId>> keyed;
  for (VertexId v = 0; v < n; ++v) {
    if (v == g.root() || !labels.vertex[v]) {
      vc.class_of[v] = vc.root_class;
      ++vc.weight[vc.root_class];
      continue;
    }
    keyed.push_back({index.key(*labels.vertex[v]), v});
  }
  std::sort(keyed.begin(), keyed.end());
  std::int64_t budget = kExactCheckBudget;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    VertexId v = keyed[i].second;
    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
      vc.rep.push_back(v);
      vc.weight.push_back(0);
      vc.label.push_back(labels.vertex[v]);
      vc.key.push_back(keyed[i].first);
    } else {
      const CutLabel& mine = *labels.vertex[v];
      const CutLabel& first = *vc.label.back();
      if (!(mine == first) && (budget -= 2 * mine.size) > 0 && index.materialize(mine) != index.materialize(first))
        throw Error(ErrorCode::InconsistentLabels, "fingerprint collision between distinct cuts");
    }
    int c = vc.count() - 1;
    vc.class_of[v] = c;
    ++vc.weight[c];
  }
  return vc;
}

// the merged graph of the preprocessing step together with the vertex map
inline MergeResult preprocess_merge(const WeightedGraph& g, const VertexClasses& vc) {
  std::vector<std::vector<VertexId>> classes(static_cast<std::size_t>(vc.count()));
  for (VertexId v = 0; v < g.n(); ++v) classes[vc.class_of[v]].push_back(v);
  return merge_vertices(g, classes);
}

// parent class per class: owner of the second-smallest class cut containing the representative
inline std::vector<int> build_nesting_tree(const VertexClasses& vc, const TreePacking& packing) {
  const int k = vc.count();
  std::vector<std::vector<std::pair<std::int64_t, int>>> found(static_cast<std::size_t>(k));
  std::vector<int> by_tree_count(packing.trees.size(), 0);
  for (int c = 0; c < k; ++c)
    if (c != vc.root_class) ++by_tree_count[vc.label[c]->tree];

  for (int ti = 0; ti < static_cast<int>(packing.trees.size()); ++ti) {
    if (by_tree_count[ti] == 0) continue;
    const RootedSpanningTree& t = packing.trees[ti];
    const int n = static_cast<int>(t.n());
    // (position, +1 add / -1 remove, class)
    std::vector<std::tuple<int, int, int>> events;
    auto range = [&](VertexId a, int c) {
      events.emplace_back(t.pre[a], 1, c);
      events.emplace_back(t.pre[a] + t.size[a], -1, c);
    };
    for (int c = 0; c < k; ++c) {
      if (c == vc.root_class || vc.label[c]->tree != ti) continue;
      const CutLabel& l = *vc.label[c];
      switch (l.kind) {
        case CutKind::Type1: range(l.v, c); break;
        case CutKind::Comp2:
          events.emplace_back(t.pre[l.v], 1, c);
          events.emplace_back(t.pre[l.w], -1, c);
          if (t.pre[l.w] + t.size[l.w] < t.pre[l.v] + t.size[l.v]) {
            events.emplace_back(t.pre[l.w] + t.size[l.w], 1, c);
            events.emplace_back(t.pre[l.v] + t.size[l.v], -1, c);
          }
          break;
        case CutKind::Incomp2:
          range(l.v, c);
          range(l.w, c);
          break;
      }
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
      return std::make_pair(std::get<0>(a), std::get<1>(a)) < std::make_pair(std::get<0>(b), std::get<1>(b));
    });
    std::vector<int> rep_class(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < k; ++c)
      if (c != vc.root_class) rep_class[vc.rep[c]] = c;
    std::set<std::pair<std::int64_t, int>> active;
    std::size_t ev = 0;
    for (int pos = 0; pos < n; ++pos) {
      for (; ev < events.size() && std::get<0>(events[ev]) == pos; ++ev) {
        auto [p, d, c] = events[ev];
        if (d > 0) active.insert({vc.label[c]->size, c});
        else active.erase({vc.label[c]->size, c});
      }
      int c = rep_class[t.order[pos]];
      if (c < 0) continue;
      auto it = active.begin();
      for (int j = 0; j < 2 && it != active.end(); ++j, ++it) found[c].push_back(*it);
    }
  }

  std::vector<int> parent(static_cast<std::size_t>(k), -1);
  for (int c = 0; c < k; ++c) {
    if (c == vc.root_class) continue;
    auto& f = found[c];
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty() || f.front().second != c)
      throw Error(ErrorCode::InconsistentLabels, "a class cut is not the smallest cut containing its vertex");
    parent[c] = f.size() > 1 ? f[1].second : vc.root_class;
  }
  return parent;
}

enum class CertKind { Vertex, Edge, Chain, Root };

struct HierarchyNode {
  CertKind kind = CertKind::Vertex;
  std::int64_t size = 0;
  VertexId rep = kNoVertex;
  int vertex_class = -1;
  EdgeId edge = -1;
  std::deque<int> parts;  // chain parts, read in reverse when reversed is set
  bool reversed = false;
  std::vector<int> children;  // nested members that are not chain parts
  int parent = -1;
  bool alive = true;

  int part_count() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return reversed ? parts[parts.size() - 1 - i] : parts[i]; }
  int first_part() const { return reversed ? parts.back() : parts.front(); }
  int last_part() const { return reversed ? parts.front() : parts.back(); }
  void push_first(int x) {
    if (reversed) parts.push_back(x);
    else parts.push_front(x);
  }
  void push_last(int x) {
    if (reversed) parts.push_front(x);
    else parts.push_back(x);
  }
};

struct Hierarchy {
  VertexId n = 0;
  VertexClasses classes;
  std::vector<int> nesting_parent;  // per class
  std::vector<HierarchyNode> nodes;
  int root = -1;
  std::vector<int> class_node;  // node owning each class directly

  // all graph vertices below a node
  std::vector<VertexId> members(int node) const {
    std::vector<char> in_class(static_cast<std::size_t>(classes.count()), 0);
    std::vector<int> stack{node};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      const HierarchyNode& h = nodes[x];
      if (h.vertex_class >= 0) in_class[h.vertex_class] = 1;
      for (int c : h.children) stack.push_back(c);
      for (int p : h.parts) stack.push_back(p);
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
      if (in_class[classes.class_of[v]]) out.push_back(v);
    return out;
  }

  std::vector<int> chain_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (nodes[i].alive && nodes[i].kind == CertKind::Chain) out.push_back(i);
    return out;
  }
};

struct HierarchyOptions {
  bool reverse_ties = false;  // walk equal-size cuts in reverse key order
};

namespace detail {

class ClassDsu {
 public:
  explicit ClassDsu(int k) : parent_(static_cast<std::size_t>(k)), size_(static_cast<std::size_t>(k), 1),
                             owner_(static_cast<std::size_t>(k), -1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  int owner(int x) { return owner_[find(x)]; }

  void attach(int x, int node) {
    int r = find(x);
    owner_[r] = node;
  }

  void unite(int a, int b, int node) {
    a = find(a);
    b = find(b);
    if (a != b) {
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
    }
    owner_[a] = node;
  }

 private:
  std::vector<int> parent_, size_, owner_;
};

}  // namespace detail

// builds the laminar hierarchy of chain, edge and vertex certified mincuts
inline Hierarchy build_hierarchy(const WeightedGraph& g, const ItemLabels& labels, const TreePacking& packing,
                                 const LabelIndex& index, HierarchyOptions opt = {}) {
  Hierarchy h;
  h.n = g.n();
  h.classes = classify_vertices(g, labels, index);
  h.nesting_parent = build_nesting_tree(h.classes, packing);
  const VertexClasses& vc = h.classes;
  const int k = vc.count();
  h.class_node.assign(static_cast<std::size_t>(k), -1);

  std::vector<std::vector<int>> nest_children(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    if (c != vc.root_class) nest_children[h.nesting_parent[c]].push_back(c);

  struct Item {
    CutKey key;
    int is_edge;
    int id;  // class or edge id
  };
  std::vector<Item> items;
  for (int c = 0; c < k; ++c)
    if (c != vc.root_class) items.push_back({vc.key[c], 0, c});
  for (EdgeId e = 0; e < g.m(); ++e)
    if (labels.edge[e]) items.push_back({index.key(*labels.edge[e]), 1, e});
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.key.size != b.key.size) return a.key.size < b.key.size;
    if (a.key != b.key) return opt.reverse_ties ? b.key < a.key : a.key < b.key;
    return std::tie(a.is_edge, a.id) < std::tie(b.is_edge, b.id);
  });

  detail::ClassDsu dsu(k);
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::AlgorithmInvariantViolation, msg); };
  auto new_node = [&](CertKind kind, std::int64_t size, VertexId rep) {
    HierarchyNode node;
    node.kind = kind;
    node.size = size;
    node.rep = rep;
    h.nodes.push_back(std::move(node));
    return static_cast<int>(h.nodes.size()) - 1;
  };
  auto cls = [&](VertexId v) { return vc.class_of[v]; };

  auto add_nesting_superset = [&](int node, const std::vector<int>& subsumed, int own_class) {
    std::int64_t total = own_class >= 0 ? vc.weight[own_class] : 0;
    for (int s : subsumed) {
      total += h.nodes[s].size;
      h.nodes[s].parent = node;
      h.nodes[node].children.push_back(s);
    }
    if (total != h.nodes[node].size) fail("nesting superset does not match its members");
    if (own_class >= 0) {
      h.nodes[node].vertex_class = own_class;
      h.class_node[own_class] = node;
      dsu.attach(own_class, node);
    }
    for (int s : subsumed) {
      int anchor = cls(h.nodes[s].rep);
      if (own_class >= 0) dsu.unite(own_class, anchor, node);
      else {
        own_class = anchor;
        dsu.attach(anchor, node);
      }
    }
  };

  // whether node a is split by the cut with label x
  auto crosses = [&](int a, const CutLabel& x) {
    const HierarchyNode& n = h.nodes[a];
    switch (n.kind) {
      case CertKind::Vertex: return false;
      case CertKind::Edge: {
        const Edge& e = g.edge(n.edge);
        return !(index.contains(x, e.u) && index.contains(x, e.v));
      }
      case CertKind::Chain:
        return index.contains(x, h.nodes[n.first_part()].rep) != index.contains(x, h.nodes[n.last_part()].rep);
      case CertKind::Root: break;
    }
    fail("root node cannot cross");
    return false;
  };

  std::size_t i = 0;
  while (i < items.size()) {
    std::size_t j = i;
    while (j < items.size() && items[j].key == items[i].key) ++j;
    for (std::size_t q = i; q < j; ++q) {
      const Item& it = items[q];
      if (!it.is_edge) {
        int u = it.id;
        if (dsu.owner(u) >= 0) continue;
        std::vector<int> subsumed;
        for (int c : nest_children[u]) {
          int o = dsu.owner(c);
          if (o < 0) fail("nested class processed out of order");
          if (std::find(subsumed.begin(), subsumed.end(), o) == subsumed.end()) subsumed.push_back(o);
        }
        int node = new_node(CertKind::Vertex, vc.label[u]->size, vc.rep[u]);
        add_nesting_superset(node, subsumed, u);
        continue;
      }
      const EdgeId e = it.id;
      const CutLabel& x = *labels.edge[e];
      const Edge& ed = g.edge(e);
      int cu = cls(ed.u), cv = cls(ed.v);
      if (cu == vc.root_class || cv == vc.root_class) fail("edge cut contains a vertex without a minimal mincut");
      int a = dsu.owner(cu), b = dsu.owner(cv);
      if (a < 0 || b < 0) fail("edge endpoint outside every stored cut");
      if (a == b) continue;
      const std::int64_t ab = h.nodes[a].size + h.nodes[b].size;
      if (x.size == ab) {
        int node = new_node(CertKind::Chain, ab, h.nodes[a].rep);
        h.nodes[node].edge = e;
        h.nodes[node].parts = {a, b};
        h.nodes[a].parent = node;
        h.nodes[b].parent = node;
        dsu.unite(cls(h.nodes[a].rep), cls(h.nodes[b].rep), node);
      } else if (x.size < ab) {
        bool ca = crosses(a, x), cb = crosses(b, x);
        if (!ca && !cb) fail("smaller edge cut crosses neither stored cut");
        if (!ca) {
          std::swap(a, b);
          std::swap(ca, cb);
        }
        HierarchyNode& na = h.nodes[a];
        if (na.kind != CertKind::Chain) fail("crossed cut has no chain certificate");
        const bool x_at_first = index.contains(x, h.nodes[na.first_part()].rep);
        if (!cb) {
          if (x_at_first) na.push_first(b);
          else na.push_last(b);
          na.size += h.nodes[b].size;
          h.nodes[b].parent = a;
          dsu.unite(cls(na.rep), cls(h.nodes[b].rep), a);
        } else {
          HierarchyNode& nb = h.nodes[b];
          if (nb.kind != CertKind::Chain) fail("crossed cut has no chain certificate");
          const bool b_x_at_first = index.contains(x, h.nodes[nb.first_part()].rep);
          // logical order: A with its X end last, then B with its X end first
          if (x_at_first) na.reversed = !na.reversed;
          if (!b_x_at_first) nb.reversed = !nb.reversed;
          int keep = a, drop = b;
          if (nb.part_count() > na.part_count()) std::swap(keep, drop);
          HierarchyNode& nk = h.nodes[keep];
          HierarchyNode& nd = h.nodes[drop];
          if (keep == a) {
            for (int p = 0; p < nd.part_count(); ++p) nk.push_last(nd.part(p));
          } else {
            for (int p = nd.part_count() - 1; p >= 0; --p) nk.push_first(nd.part(p));
          }
          for (int p : nd.parts) h.nodes[p].parent = keep;
          for (int c : nd.children) {
            h.nodes[c].parent = keep;
            nk.children.push_back(c);
          }
          nk.size += nd.size;
          nd.alive = false;
          nd.parts.clear();
          nd.children.clear();
          dsu.unite(cls(nk.rep), cls(nd.rep), keep);
        }
      } else {
        std::vector<int> subsumed;
        for (std::size_t r = i; r < j; ++r) {
          if (!items[r].is_edge) continue;
          const Edge& f = g.edge(items[r].id);
          for (VertexId y : {f.u, f.v}) {
            int o = dsu.owner(cls(y));
            if (o < 0) fail("edge endpoint outside every stored cut");
            if (std::find(subsumed.begin(), subsumed.end(), o) == subsumed.end()) subsumed.push_back(o);
          }
        }
        std::sort(subsumed.begin(), subsumed.end());
        int node = new_node(CertKind::Edge, x.size, h.nodes[a].rep);
        h.nodes[node].edge = e;
        add_nesting_superset(node, subsumed, -1);
      }
    }
    i = j;
  }

  h.root = new_node(CertKind::Root, 0, g.root());
  std::vector<int> top;
  for (int x = 0; x < h.root; ++x)
    if (h.nodes[x].alive && h.nodes[x].parent < 0) top.push_back(x);
  h.nodes[h.root].size = h.n;
  h.nodes[h.root].vertex_class = vc.root_class;
  h.class_node[vc.root_class] = h.root;
  std::int64_t total = vc.weight[vc.root_class];
  for (int x : top) {
    total += h.nodes[x].size;
    h.nodes[x].parent = h.root;
    h.nodes[h.root].children.push_back(x);
  }
  if (total != h.n) fail("hierarchy does not cover every vertex");
  for (int c = 0; c < k; ++c)
    if (h.class_node[c] < 0) fail("class without a vertex certificate node");
  return h;
}

struct Cactus {
  Wide lambda = 0;
  VertexId n = 0;
  int root_node = 0;
  std::vector<std::vector<VertexId>> nodes;  // graph vertices per node
  std::vector<std::pair<int, int>> bridges;  // (child, parent)
  std::vector<std::vector<int>> cycles;      // node sequence, closing edge implied
  std::vector<int> node_of;                  // per graph vertex
};

// chain nodes become cycles (v_A, C_0..C_l); every other parent link is a bridge
inline Cactus hierarchy_to_cactus(const Hierarchy& h, Wide lambda) {
  Cactus c;
  c.lambda = lambda;
  c.n = h.n;
  std::vector<int> id(h.nodes.size(), -1);
  id[h.root] = 0;
  int next = 1;
  for (int x = 0; x < static_cast<int>(h.nodes.size()); ++x)
    if (h.nodes[x].alive && x != h.root) id[x] = next++;
  c.nodes.assign(static_cast<std::size_t>(next), {});
  c.root_node = 0;
  c.node_of.assign(static_cast<std::size_t>(h.n), -1);
  for (VertexId v = 0; v < h.n; ++v) {
    int node = id[h.class_node[h.classes.class_of[v]]];
    c.node_of[v] = node;
    c.nodes[node].push_back(v);
  }
  for (int x = 0; x < static_cast<int>(h.nodes.size()); ++x) {
    const HierarchyNode& hn = h.nodes[x];
    if (!hn.alive || x == h.root) continue;
    if (h.nodes[hn.parent].kind != CertKind::Chain ||
        std::find(h.nodes[hn.parent].parts.begin(), h.nodes[hn.parent].parts.end(), x) ==
            h.nodes[hn.parent].parts.end())
      c.bridges.push_back({id[x], id[hn.parent]});
    if (hn.kind == CertKind::Chain) {
      std::vector<int> cycle{id[x]};
      for (int p = 0; p < hn.part_count(); ++p) cycle.push_back(id[hn.part(p)]);
      c.cycles.push_back(std::move(cycle));
    }
  }
  std::sort(c.bridges.begin(), c.bridges.end());
  return c;
}

struct CactusStructure {
  bool ok = true;
  std::vector<std::string> problems;
};

// connected, every vertex on one node, cycles edge-disjoint and cyclomatic number equal to the cycle count
inline CactusStructure check_cactus_structure(const Cactus& c) {
  CactusStructure s;
  const int k = static_cast<int>(c.nodes.size());
  auto bad = [&](std::string msg) {
    s.ok = false;
    s.problems.push_back(std::move(msg));
  };
  std::vector<int> seen_vertex(static_cast<std::size_t>(c.n), 0);
  for (const auto& node : c.nodes)
    for (VertexId v : node)
      if (v >= 0 && v < c.n) ++seen_vertex[v];
  for (VertexId v = 0; v < c.n; ++v)
    if (seen_vertex[v] != 1) bad("vertex " + std::to_string(v) + " is not on exactly one node");
  std::set<std::pair<int, int>> cycle_edges;
  std::size_t edge_count = c.bridges.size();
  std::vector<int> dsu(static_cast<std::size_t>(k));
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](int x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  auto join = [&](int a, int b) {
    if (a < 0 || b < 0 || a >= k || b >= k) {
      bad("structural edge refers to a missing node");
      return;
    }
    dsu[find(a)] = find(b);
  };
  for (auto [a, b] : c.bridges) join(a, b);
  for (const auto& cyc : c.cycles) {
    if (cyc.size() < 3) bad("cycle shorter than three nodes");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (!cycle_edges.insert({std::min(a, b), std::max(a, b)}).second) bad("edge shared by two cycles");
      join(a, b);
      ++edge_count;
    }
  }
  for (int x = 0; x < k; ++x)
    if (find(x) != find(0)) {
      bad("cactus is disconnected");
      break;
    }
  if (s.ok && edge_count != static_cast<std::size_t>(k - 1) + c.cycles.size()) bad("cycles are not independent");
  return s;
}

// every cut from one bridge or two edges of the same cycle, canonical and deduplicated
inline std::vector<CutSet> enumerate_cactus_cuts(const Cactus& c) {
  const int k = static_cast<int>(c.nodes.size());
  struct Arc {
    int to, id;
  };
  std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(k));
  int edges = 0;
  auto add = [&](int a, int b) {
    adj[a].push_back({b, edges});
    adj[b].push_back({a, edges});
    return edges++;
  };
  std::vector<int> bridge_ids;
  for (auto [a, b] : c.bridges) bridge_ids.push_back(add(a, b));
  std::vector<std::vector<int>> cycle_ids;
  for (const auto& cyc : c.cycles) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < cyc.size(); ++i) ids.push_back(add(cyc[i], cyc[(i + 1) % cyc.size()]));
    cycle_ids.push_back(std::move(ids));
  }
  std::vector<char> removed(static_cast<std::size_t>(edges), 0), reach(static_cast<std::size_t>(k));
  std::set<CutSet> out;
  auto emit = [&] {
    std::fill(reach.begin(), reach.end(), 0);
    std::vector<int> stack{c.root_node};
    reach[c.root_node] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Arc& a : adj[x])
        if (!removed[a.id] && !reach[a.to]) {
          reach[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    std::vector<VertexId> members;
    for (int x = 0; x < k; ++x)
      if (!reach[x]) members.insert(members.end(), c.nodes[x].begin(), c.nodes[x].end());
    if (!members.empty() && static_cast<VertexId>(members.size()) < c.n) out.insert(CutSet(c.n, std::move(members)));
  };
  for (int id : bridge_ids) {
    removed[id] = 1;
    emit();
    removed[id] = 0;
  }
  for (const auto& ids : cycle_ids)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        removed[ids[a]] = removed[ids[b]] = 1;
        emit();
        removed[ids[a]] = removed[ids[b]] = 0;
      }
  return {out.begin(), out.end()};
}

// distinct cuts without enumeration; a bridge hanging off an empty cycle node repeats that node's arc pair
inline Wide count_cactus_cuts(const Cactus& c) {
  std::vector<int> degree(c.nodes.size(), 0), on_cycle(c.nodes.size(), 0);
  for (auto [a, b] : c.bridges) {
    ++degree[a];
    ++degree[b];
  }
  Wide total = static_cast<Wide>(c.bridges.size());
  for (const auto& cyc : c.cycles) {
    const Wide k = static_cast<Wide>(cyc.size());
    total += k * (k - 1) / 2;
    for (int x : cyc) {
      degree[x] += 2;
      ++on_cycle[x];
    }
  }
  for (auto [a, b] : c.bridges)
    for (int x : {a, b})
      if (c.nodes[x].empty() && on_cycle[x] == 1 && degree[x] == 3) {
        --total;
        break;
      }
  return total;
}

struct CactusStats {
  int nodes = 0;
  int bridges = 0;
  int cycles = 0;
  int longest_cycle = 0;
};

inline CactusStats cactus_stats(const Cactus& c) {
  CactusStats s{static_cast<int>(c.nodes.size()), static_cast<int>(c.bridges.size()), static_cast<int>(c.cycles.size()), 0};
  for (const auto& cyc : c.cycles) s.longest_cycle = std::max(s.longest_cycle, static_cast<int>(cyc.size()));
  return s;
}

}  // namespace cactusvine

#endif  // CACTUSVINE_CACTUS_HPP
