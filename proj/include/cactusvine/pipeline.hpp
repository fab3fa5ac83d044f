#ifndef CACTUSVINE_PIPELINE_HPP
#define CACTUSVINE_PIPELINE_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>
#include <boost/property_map/property_map.hpp>

#include "cactusvine/comparable.hpp"
#include "cactusvine/incomparable.hpp"
#include "cactusvine/labels.hpp"
#include "cactusvine/respect1.hpp"
#include "cactusvine/tree_context.hpp"
#include "cactusvine/tree_packing.hpp"

namespace cactusvine {

// per-tree minima and the partner tables that are only meaningful when the tree attains λ
struct TreeSummary {
  Wide min_type1 = kWideMax;
  Wide min_comp = kWideMax;
  Wide min_incomp = kWideMax;
  std::vector<VertexId> highest;
  std::vector<VertexId> incomparable_partner;

  Wide minimum() const { return std::min({min_type1, min_comp, min_incomp}); }
};

struct TreeCandidates {
  std::vector<MaybeLabel> type1, comp, incomp;  // indexed by edge of the loop-augmented graph
};

struct ItemLabels {
  std::vector<MaybeLabel> vertex;
  std::vector<MaybeLabel> edge;
};

inline TreeSummary summarize_tree(const WeightedGraph& aug, const RootedSpanningTree& t, int tree_id) {
  TreeContext ctx = make_tree_context(aug, t, tree_id);
  TreeSummary s;
  s.min_type1 = one_respecting_minimum(ctx);
  PartnerTable h = highest_partner_minima(ctx);
  PartnerTable r = incomparable_partner_minima(ctx);
  s.min_comp = h.minimum();
  s.min_incomp = r.minimum();
  Wide local = s.minimum();
  s.highest = h.accepted(local);
  s.incomparable_partner = r.accepted(local);
  return s;
}

inline TreeCandidates label_tree(const WeightedGraph& aug, const RootedSpanningTree& t, int tree_id,
                                 const TreeSummary& s, Wide lambda) {
  TreeCandidates out;
  const std::size_t m = static_cast<std::size_t>(aug.m());
  if (s.minimum() != lambda) {
    out.type1.resize(m);
    out.comp.resize(m);
    out.incomp.resize(m);
    return out;
  }
  TreeContext ctx = make_tree_context(aug, t, tree_id);
  out.type1 = type1_labels(ctx, lambda);
  out.comp = comparable_labels(ctx, s.highest, lambda);
  out.incomp = incomparable_labels(ctx, s.incomparable_partner, lambda);
  return out;
}

// exact λ for cross-checking on moderate sizes
inline Wide stoer_wagner_lambda(const WeightedGraph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                       boost::property<boost::edge_weight_t, Weight>>;
  BGraph bg(static_cast<std::size_t>(g.n()));
  for (const Edge& e : g.edges())
    if (e.u != e.v) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), e.w, bg);
  return boost::stoer_wagner_min_cut(bg, boost::get(boost::edge_weight, bg));
}

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct LabelingResult {
  Wide lambda = 0;
  ItemLabels labels;
  std::vector<TreeSummary> summaries;
};

// λ over all trees, then per-item combination of all candidates of weight λ
inline LabelingResult label_all(const WeightedGraph& g, const TreePacking& packing, int threads = 1) {
  const WeightedGraph aug = g.with_vertex_loops();
  const int k = static_cast<int>(packing.trees.size());
  if (k == 0) throw Error(ErrorCode::PackingUnverifiable, "empty tree packing");
  LabelingResult res;
  res.summaries.resize(static_cast<std::size_t>(k));
  parallel_for(k, threads, [&](int i) { res.summaries[i] = summarize_tree(aug, packing.trees[i], i); });
  res.lambda = kWideMax;
  for (const TreeSummary& s : res.summaries) res.lambda = std::min(res.lambda, s.minimum());

  std::vector<MaybeLabel> combined(static_cast<std::size_t>(aug.m()));
  std::mutex merge_mutex;
  parallel_for(k, threads, [&](int i) {
    TreeCandidates c = label_tree(aug, packing.trees[i], i, res.summaries[i], res.lambda);
    res.summaries[i].highest.clear();
    res.summaries[i].highest.shrink_to_fit();
    res.summaries[i].incomparable_partner.clear();
    res.summaries[i].incomparable_partner.shrink_to_fit();
    // offer is order independent: the minimum under a total order
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t e = 0; e < combined.size(); ++e) {
      offer(combined[e], c.type1[e], res.lambda);
      offer(combined[e], c.comp[e], res.lambda);
      offer(combined[e], c.incomp[e], res.lambda);
    }
  });

  const EdgeId m = g.m();
  res.labels.edge.assign(combined.begin(), combined.begin() + m);
  res.labels.vertex.assign(combined.begin() + m, combined.end());
  return res;
}

// per-tree candidates without combining, for inspection and tests
inline std::vector<TreeCandidates> tree_candidates(const WeightedGraph& g, const TreePacking& packing, Wide lambda) {
  const WeightedGraph aug = g.with_vertex_loops();
  std::vector<TreeCandidates> out;
  for (int i = 0; i < static_cast<int>(packing.trees.size()); ++i) {
    TreeSummary s = summarize_tree(aug, packing.trees[i], i);
    out.push_back(label_tree(aug, packing.trees[i], i, s, lambda));
  }
  return out;
}

inline Wide min_weighted_degree(const WeightedGraph& g) {
  Wide best = kWideMax;
  for (VertexId v = 0; v < g.n(); ++v) best = std::min(best, g.weighted_degree(v));
  return best;
}

inline constexpr VertexId kCrossCheckMaxVertices = 3000;

// cheap evidence that the packing missed a mincut; empty when nothing looks wrong
inline std::optional<std::string> packing_suspicion(const WeightedGraph& g, const LabelingResult& r) {
  if (r.lambda > min_weighted_degree(g)) return "lambda exceeds the minimum weighted degree";
  if (g.n() <= kCrossCheckMaxVertices && stoer_wagner_lambda(g) != r.lambda)
    return "lambda disagrees with Stoer-Wagner";
  for (VertexId v = 0; v < g.n(); ++v) {
    if (v == g.root() || g.weighted_degree(v) != r.lambda) continue;
    const MaybeLabel& l = r.labels.vertex[v];
    if (!l || l->size != 1) return "singleton mincut without a singleton label";
  }
  return std::nullopt;
}

}  // namespace cactusvine

#endif  // CACTUSVINE_PIPELINE_HPP
