#ifndef CACTUSVINE_DYN_FOREST_HPP
#define CACTUSVINE_DYN_FOREST_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cactusvine/graph.hpp"
#include "cactusvine/rooted_tree.hpp"

namespace cactusvine {

// value = mask*M2 + inf*M1 + fin for symbolic M2 >> M1 >> any finite; mask is internal
struct ForestValue {
  std::int64_t mask = 0;
  std::int64_t inf = 0;
  Wide fin = 0;

  static ForestValue finite(Wide x) { return {0, 0, x}; }
  static ForestValue infinity() { return {0, 1, 0}; }

  bool is_inf() const { return mask > 0 || inf > 0; }
  bool is_zero() const { return mask == 0 && inf == 0 && fin == 0; }

  ForestValue operator+(const ForestValue& o) const { return {mask + o.mask, inf + o.inf, fin + o.fin}; }
  ForestValue operator-() const { return {-mask, -inf, -fin}; }
  ForestValue operator-(const ForestValue& o) const { return *this + (-o); }
  ForestValue& operator+=(const ForestValue& o) {
    mask += o.mask;
    inf += o.inf;
    fin += o.fin;
    return *this;
  }

  friend bool operator==(const ForestValue& a, const ForestValue& b) {
    return a.mask == b.mask && a.inf == b.inf && a.fin == b.fin;
  }
  friend bool operator!=(const ForestValue& a, const ForestValue& b) { return !(a == b); }
  friend bool operator<(const ForestValue& a, const ForestValue& b) {
    if (a.mask != b.mask) return a.mask < b.mask;
    if (a.inf != b.inf) return a.inf < b.inf;
    return a.fin < b.fin;
  }
  friend bool operator>(const ForestValue& a, const ForestValue& b) { return b < a; }
  friend bool operator<=(const ForestValue& a, const ForestValue& b) { return !(b < a); }
  friend bool operator>=(const ForestValue& a, const ForestValue& b) { return !(a < b); }
};

enum class PathTie { Lowest, Highest };
enum class TreeTie { SmallestSubtree, LargestSubtree };

struct ForestMin {
  VertexId vertex = kNoVertex;
  ForestValue value;
};

// rooted link-cut forest with virtual-subtree aggregates
class DynForest {
 public:
  explicit DynForest(std::vector<int> tie_size) : n_(static_cast<VertexId>(tie_size.size())), tie_(std::move(tie_size)) {
    allocate();
    for (int x = 1; x <= n_; ++x) pull(x);
  }

  DynForest(const RootedSpanningTree& t, const std::vector<ForestValue>& init) : n_(t.n()), tie_(t.size) {
    allocate();
    for (VertexId v = 0; v < n_; ++v) val_[v + 1] = init[v];
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
      int x = *it + 1;
      pull(x);
      if (t.parent[*it] != kNoVertex) {
        int p = t.parent[*it] + 1;
        par_[x] = p;
        fparent_[x] = p;
        virt_insert(p, x);
      }
    }
  }

  DynForest(const DynForest&) = delete;
  DynForest& operator=(const DynForest&) = delete;
  DynForest(DynForest&&) = default;
  DynForest& operator=(DynForest&&) = default;

  VertexId size() const { return n_; }
  VertexId parent_of(VertexId v) const { return fparent_[v + 1] - 1; }

  VertexId find_root(VertexId v) {
    int x = v + 1;
    access(x);
    for (;;) {
      push(x);
      if (!ch_[x][0]) break;
      x = ch_[x][0];
    }
    splay(x);
    return x - 1;
  }

  bool same_tree(VertexId a, VertexId b) { return find_root(a) == find_root(b); }

  // child must be the root of its tree; it becomes a child of parent
  void link(VertexId child, VertexId parent) {
    int c = child + 1, p = parent + 1;
    if (fparent_[c] != 0) throw Error(ErrorCode::NotTreeRoot, "link: first vertex is not the root of its tree");
    if (find_root(parent) == child) throw Error(ErrorCode::SameTree, "link: vertices already in one tree");
    access(c);
    access(p);
    par_[c] = p;
    fparent_[c] = p;
    virt_insert(p, c);
    pull(p);
  }

  void cut(VertexId a, VertexId b) {
    if (fparent_[a + 1] == b + 1)
      cut_parent(a);
    else if (fparent_[b + 1] == a + 1)
      cut_parent(b);
    else
      throw Error(ErrorCode::NotForestEdge, "cut: edge not in forest");
  }

  void cut_parent(VertexId child) {
    int c = child + 1;
    if (fparent_[c] == 0) throw Error(ErrorCode::NotForestEdge, "cut: vertex has no parent");
    access(c);
    int l = ch_[c][0];
    par_[l] = 0;
    ch_[c][0] = 0;
    pull(c);
    fparent_[c] = 0;
  }

  void add_path(VertexId u, const ForestValue& x) {
    if (x.is_zero()) return;
    int a = u + 1;
    access(a);
    apply(a, x);
  }

  void set_value(VertexId v, const ForestValue& x) {
    int a = v + 1;
    access(a);
    val_[a] = x;
    pull(a);
  }

  ForestValue value(VertexId v) {
    int a = v + 1;
    access(a);
    return val_[a];
  }

  ForestMin min_path(VertexId u, PathTie tie) {
    int a = u + 1;
    access(a);
    const Agg& g = path_[a];
    return {(tie == PathTie::Lowest ? g.ida : g.idd) - 1, g.val};
  }

  ForestMin min_tree(VertexId u, TreeTie tie) {
    int a = u + 1;
    access(a);
    Agg g = merge(path_[a], virt_[a]);
    return {(tie == TreeTie::SmallestSubtree ? g.ida : g.idd) - 1, g.val};
  }

  // minimum over v's tree minus the v-w path; ties as min_tree(SmallestSubtree)
  std::optional<ForestMin> min_non_path(VertexId v, VertexId w) {
    if (find_root(v) != find_root(w)) throw Error(ErrorCode::DifferentTrees, "min_non_path: vertices in different trees");
    access(v + 1);
    VertexId l = access(w + 1) - 1;
    const ForestValue m{1, 0, 0};
    add_path(v, m);
    add_path(w, m);
    add_path(l, -m);
    VertexId pl = parent_of(l);
    if (pl != kNoVertex) add_path(pl, -m);
    ForestMin res = min_tree(v, TreeTie::SmallestSubtree);
    if (pl != kNoVertex) add_path(pl, m);
    add_path(l, m);
    add_path(w, -m);
    add_path(v, -m);
    if (res.value.mask > 0) return std::nullopt;
    return res;
  }

 private:
  struct Agg {
    ForestValue val;
    int ida = 0;  // argmin under (val, size asc, id asc)
    int idd = 0;  // argmin under (val, size desc, id asc)
  };

  struct Entry {
    ForestValue val;
    int id;
  };

  struct AscCmp {
    const int* tie;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.val != b.val) return a.val < b.val;
      int sa = tie[a.id - 1], sb = tie[b.id - 1];
      if (sa != sb) return sa < sb;
      return a.id < b.id;
    }
  };

  struct DescCmp {
    const int* tie;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.val != b.val) return a.val < b.val;
      int sa = tie[a.id - 1], sb = tie[b.id - 1];
      if (sa != sb) return sa > sb;
      return a.id < b.id;
    }
  };

  void allocate() {
    const std::size_t sz = static_cast<std::size_t>(n_) + 1;
    ch_.assign(sz, {0, 0});
    par_.assign(sz, 0);
    fparent_.assign(sz, 0);
    val_.assign(sz, ForestValue{});
    lazy_.assign(sz, ForestValue{});
    path_.assign(sz, Agg{});
    virt_.assign(sz, Agg{});
    seta_.clear();
    setd_.clear();
    seta_.reserve(sz);
    setd_.reserve(sz);
    for (std::size_t i = 0; i < sz; ++i) {
      seta_.emplace_back(AscCmp{tie_.data()});
      setd_.emplace_back(DescCmp{tie_.data()});
    }
  }

  bool asc_better(int a, int b) const {
    int sa = tie_[a - 1], sb = tie_[b - 1];
    if (sa != sb) return sa < sb;
    return a < b;
  }

  bool desc_better(int a, int b) const {
    int sa = tie_[a - 1], sb = tie_[b - 1];
    if (sa != sb) return sa > sb;
    return a < b;
  }

  Agg merge(const Agg& a, const Agg& b) const {
    if (!a.ida) return b;
    if (!b.ida) return a;
    if (a.val < b.val) return a;
    if (b.val < a.val) return b;
    Agg r;
    r.val = a.val;
    r.ida = asc_better(a.ida, b.ida) ? a.ida : b.ida;
    r.idd = desc_better(a.idd, b.idd) ? a.idd : b.idd;
    return r;
  }

  bool is_splay_root(int x) const {
    int p = par_[x];
    return p == 0 || (ch_[p][0] != x && ch_[p][1] != x);
  }

  void apply(int x, const ForestValue& d) {
    val_[x] += d;
    if (path_[x].ida) path_[x].val += d;
    lazy_[x] += d;
  }

  void push(int x) {
    if (lazy_[x].is_zero()) return;
    if (ch_[x][0]) apply(ch_[x][0], lazy_[x]);
    if (ch_[x][1]) apply(ch_[x][1], lazy_[x]);
    lazy_[x] = ForestValue{};
  }

  void pull(int x) {
    Agg p{val_[x], x, x};
    Agg v;
    if (!seta_[x].empty()) {
      v.val = seta_[x].begin()->val;
      v.ida = seta_[x].begin()->id;
      v.idd = setd_[x].begin()->id;
    }
    for (int c : ch_[x]) {
      if (!c) continue;
      p = merge(p, path_[c]);
      v = merge(v, virt_[c]);
    }
    path_[x] = p;
    virt_[x] = v;
  }

  void virt_insert(int x, int c) {
    Agg g = merge(path_[c], virt_[c]);
    seta_[x].insert({g.val, g.ida});
    setd_[x].insert({g.val, g.idd});
  }

  void virt_erase(int x, int c) {
    Agg g = merge(path_[c], virt_[c]);
    seta_[x].erase({g.val, g.ida});
    setd_[x].erase({g.val, g.idd});
  }

  void rotate(int x) {
    int y = par_[x], z = par_[y];
    int dx = ch_[y][1] == x ? 1 : 0;
    if (!is_splay_root(y)) ch_[z][ch_[z][1] == y ? 1 : 0] = x;
    par_[x] = z;
    int b = ch_[x][dx ^ 1];
    ch_[y][dx] = b;
    if (b) par_[b] = y;
    ch_[x][dx ^ 1] = y;
    par_[y] = x;
    pull(y);
  }

  void splay(int x) {
    stack_.clear();
    for (int y = x;; y = par_[y]) {
      stack_.push_back(y);
      if (is_splay_root(y)) break;
    }
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) push(*it);
    while (!is_splay_root(x)) {
      int y = par_[x];
      if (!is_splay_root(y)) {
        int z = par_[y];
        bool zigzig = (ch_[z][0] == y) == (ch_[y][0] == x);
        rotate(zigzig ? y : x);
      }
      rotate(x);
    }
    pull(x);
  }

  // returns the last path-parent jump target, which is lca(previous access, x) when in one tree
  int access(int x) {
    int last = 0, ret = 0;
    for (int y = x; y; y = par_[y]) {
      splay(y);
      if (ch_[y][1]) virt_insert(y, ch_[y][1]);
      if (last) virt_erase(y, last);
      ch_[y][1] = last;
      pull(y);
      last = y;
      ret = y;
    }
    splay(x);
    return ret;
  }

  VertexId n_;
  std::vector<int> tie_;
  std::vector<std::array<int, 2>> ch_;
  std::vector<int> par_;
  std::vector<int> fparent_;
  std::vector<ForestValue> val_;
  std::vector<ForestValue> lazy_;
  std::vector<Agg> path_;
  std::vector<Agg> virt_;
  std::vector<std::set<Entry, AscCmp>> seta_;
  std::vector<std::set<Entry, DescCmp>> setd_;
  std::vector<int> stack_;
};

}  // namespace cactusvine

#endif  // CACTUSVINE_DYN_FOREST_HPP
