#ifndef CACTUSVINE_GRAPH_HPP
#define CACTUSVINE_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cactusvine/error.hpp"

namespace cactusvine {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;
using Wide = __int128;

inline constexpr VertexId kNoVertex = -1;

inline std::string wide_to_string(Wide x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;
};

class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(VertexId n, std::vector<Edge> edges, VertexId root = 0)
      : n_(n), edges_(std::move(edges)), root_(root) {
    if (n_ < 1) throw Error(ErrorCode::MalformedInput, "graph needs at least one vertex");
    if (root_ < 0 || root_ >= n_) throw Error(ErrorCode::MalformedInput, "root out of range");
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
      if (e.w <= 0) throw Error(ErrorCode::NonPositiveWeight, "edge weight must be >= 1");
      if (e.u == e.v) throw Error(ErrorCode::MalformedInput, "self-loops are not accepted");
    }
    build_adjacency();
    if (!connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
  }

  VertexId n() const { return n_; }
  EdgeId m() const { return static_cast<EdgeId>(edges_.size()); }
  VertexId root() const { return root_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // incident edge ids of v; a self-loop is listed once
  std::pair<const EdgeId*, const EdgeId*> incident(VertexId v) const {
    return {adj_.data() + adj_begin_[v], adj_.data() + adj_begin_[v + 1]};
  }

  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  Wide weighted_degree(VertexId v) const {
    Wide d = 0;
    auto [b, f] = incident(v);
    for (auto it = b; it != f; ++it)
      if (edges_[*it].u != edges_[*it].v) d += edges_[*it].w;
    return d;
  }

  WeightedGraph with_root(VertexId r) const {
    if (r < 0 || r >= n_) throw Error(ErrorCode::MalformedInput, "root out of range");
    WeightedGraph g = *this;
    g.root_ = r;
    return g;
  }

  // edge ids m..m+n-1 are zero-weight self-loops, one per vertex
  WeightedGraph with_vertex_loops() const {
    WeightedGraph g;
    g.n_ = n_;
    g.root_ = root_;
    g.edges_ = edges_;
    g.edges_.reserve(edges_.size() + static_cast<std::size_t>(n_));
    for (VertexId v = 0; v < n_; ++v) g.edges_.push_back({v, v, 0});
    g.build_adjacency();
    return g;
  }

  bool connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    VertexId count = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      auto [b, f] = incident(x);
      for (auto it = b; it != f; ++it) {
        VertexId y = other(*it, x);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == n_;
  }

 private:
  void build_adjacency() {
    adj_begin_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
      ++adj_begin_[e.u + 1];
      if (e.u != e.v) ++adj_begin_[e.v + 1];
    }
    for (VertexId v = 0; v < n_; ++v) adj_begin_[v + 1] += adj_begin_[v];
    adj_.assign(static_cast<std::size_t>(adj_begin_[n_]), 0);
    std::vector<EdgeId> fill(adj_begin_.begin(), adj_begin_.end() - 1);
    for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
      const Edge& e = edges_[id];
      adj_[fill[e.u]++] = id;
      if (e.u != e.v) adj_[fill[e.v]++] = id;
    }
  }

  VertexId n_ = 0;
  std::vector<Edge> edges_;
  VertexId root_ = 0;
  std::vector<EdgeId> adj_begin_;
  std::vector<EdgeId> adj_;
};

// canonical side of a cut: the side without the root
class CutSet {
 public:
  CutSet() = default;

  CutSet(VertexId n, std::vector<VertexId> members) : in_(static_cast<std::size_t>(n), 0), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (VertexId v : members_) {
      if (v < 0 || v >= n) throw Error(ErrorCode::InvalidCutSet, "member out of range");
      in_[v] = 1;
    }
  }

  static CutSet from_mask(const std::vector<char>& mask) {
    CutSet s;
    s.in_.assign(mask.size(), 0);
    for (std::size_t v = 0; v < mask.size(); ++v)
      if (mask[v]) {
        s.in_[v] = 1;
        s.members_.push_back(static_cast<VertexId>(v));
      }
    return s;
  }

  // flips to the side not containing root
  static CutSet canonical(const std::vector<char>& side, VertexId root) {
    if (!side[root]) return from_mask(side);
    std::vector<char> flipped(side.size());
    for (std::size_t v = 0; v < side.size(); ++v) flipped[v] = side[v] ? 0 : 1;
    return from_mask(flipped);
  }

  bool contains(VertexId v) const { return in_[v] != 0; }
  std::size_t size() const { return members_.size(); }
  VertexId universe() const { return static_cast<VertexId>(in_.size()); }
  const std::vector<VertexId>& members() const { return members_; }
  const std::vector<char>& mask() const { return in_; }

  bool valid_for(const WeightedGraph& g) const {
    return universe() == g.n() && !members_.empty() && members_.size() < static_cast<std::size_t>(g.n()) &&
           !contains(g.root());
  }

  bool subset_of(const CutSet& o) const {
    for (VertexId v : members_)
      if (!o.contains(v)) return false;
    return true;
  }

  friend bool operator==(const CutSet& a, const CutSet& b) { return a.members_ == b.members_; }
  friend bool operator<(const CutSet& a, const CutSet& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<char> in_;
  std::vector<VertexId> members_;
};

inline std::string to_string(const CutSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

inline Wide cut_weight(const WeightedGraph& g, const std::vector<char>& side) {
  Wide total = 0;
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) total += e.w;
  return total;
}

inline Wide cut_weight(const WeightedGraph& g, const CutSet& s) {
  if (!s.valid_for(g)) throw Error(ErrorCode::InvalidCutSet, "cut set must be nonempty, proper and exclude the root");
  return cut_weight(g, s.mask());
}

// C(X,Y): edges with one end in X and the other in Y; edges inside X∩Y count twice
inline Wide cross_weight(const WeightedGraph& g, const std::vector<char>& x, const std::vector<char>& y) {
  Wide total = 0;
  for (const Edge& e : g.edges()) {
    int k = (x[e.u] && y[e.v] ? 1 : 0) + (x[e.v] && y[e.u] ? 1 : 0);
    total += static_cast<Wide>(k) * e.w;
  }
  return total;
}

struct MergeResult {
  WeightedGraph graph;
  std::vector<VertexId> map;
};

inline MergeResult merge_vertices(const WeightedGraph& g, const std::vector<std::vector<VertexId>>& classes) {
  std::vector<VertexId> map(static_cast<std::size_t>(g.n()), kNoVertex);
  VertexId k = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) throw Error(ErrorCode::InvalidPartition, "empty class");
    for (VertexId v : cls) {
      if (v < 0 || v >= g.n()) throw Error(ErrorCode::InvalidPartition, "vertex out of range");
      if (map[v] != kNoVertex) throw Error(ErrorCode::InvalidPartition, "overlapping classes");
      map[v] = k;
    }
    ++k;
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (map[v] == kNoVertex) throw Error(ErrorCode::InvalidPartition, "classes do not cover V");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexId a = map[e.u], b = map[e.v];
    if (a != b) edges.push_back({a, b, e.w});
  }
  return {WeightedGraph(k, std::move(edges), map[g.root()]), std::move(map)};
}

inline WeightedGraph parse_graph(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  long long root = -1;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) fail("duplicate header");
      std::vector<std::string> tok;
      std::string t;
      while (ls >> t) tok.push_back(t);
      if (tok.size() == 3) tok.erase(tok.begin());
      if (tok.size() != 2) fail("expected 'p <n> <m>'");
      try {
        std::size_t pos = 0;
        n = std::stoll(tok[0], &pos);
        if (pos != tok[0].size()) fail("bad vertex count");
        m = std::stoll(tok[1], &pos);
        if (pos != tok[1].size()) fail("bad edge count");
      } catch (const std::logic_error&) {
        fail("bad header numbers");
      }
      if (n < 2) fail("need at least two vertices");
      if (m < 0) fail("negative edge count");
      if (n > (1LL << 30)) fail("too many vertices");
    } else if (tag == "e" || tag == "a") {
      if (n < 0) fail("edge before header");
      long long u, v, w;
      std::string extra;
      if (!(ls >> u >> v >> w) || (ls >> extra)) fail("expected 'e <u> <v> <w>'");
      if (u < 1 || u > n || v < 1 || v > n) fail("vertex out of range");
      if (w <= 0) throw Error(ErrorCode::NonPositiveWeight, "line " + std::to_string(lineno) + ": weight must be >= 1");
      if (u == v) fail("self-loop");
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), static_cast<Weight>(w)});
    } else if (tag == "r") {
      if (n < 0) fail("root before header");
      std::string extra;
      if (!(ls >> root) || (ls >> extra)) fail("expected 'r <u>'");
      if (root < 1 || root > n) fail("root out of range");
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw Error(ErrorCode::MalformedInput, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorCode::MalformedInput, "header announces " + std::to_string(m) + " edges, found " +
                                               std::to_string(edges.size()));
  return WeightedGraph(static_cast<VertexId>(n), std::move(edges), root > 0 ? static_cast<VertexId>(root - 1) : 0);
}

inline WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string to_dimacs(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p " << g.n() << " " << g.m() << "\n";
  if (g.root() != 0) out << "r " << g.root() + 1 << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << " " << e.w << "\n";
  return out.str();
}

}  // namespace cactusvine

#endif  // CACTUSVINE_GRAPH_HPP
