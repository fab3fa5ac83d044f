#ifndef CACTUSVINE_TESTS_FOREST_OPS_HPP
#define CACTUSVINE_TESTS_FOREST_OPS_HPP

#include <random>
#include <vector>

#include "cactusvine/dyn_forest.hpp"
#include "support/naive_forest.hpp"

namespace cactusvine::testing {

// random op sequences against the naive forest; returns number of compared queries
inline int run_equivalence(std::uint64_t seed, VertexId n, int ops) {
  std::mt19937_64 rng(seed);
  std::vector<int> tie(n);
  std::uniform_int_distribution<int> sd(1, n);
  for (int& s : tie) s = sd(rng);
  DynForest fast(tie);
  NaiveForest slow(tie);
  std::uniform_int_distribution<VertexId> vd(0, n - 1);
  std::uniform_int_distribution<int> op(0, 99);
  std::uniform_int_distribution<int> small(-3, 3);
  int compared = 0;
  for (int i = 0; i < ops; ++i) {
    int k = op(rng);
    VertexId a = vd(rng), b = vd(rng);
    if (k < 18) {
      VertexId ra = slow.find_root(a);
      if (slow.find_root(b) == ra) continue;
      fast.link(ra, b);
      slow.link(ra, b);
    } else if (k < 28) {
      if (slow.parent_of(a) == kNoVertex) continue;
      fast.cut(a, slow.parent_of(a));
      slow.cut(a, slow.parent_of(a));
    } else if (k < 50) {
      ForestValue x = ForestValue::finite(small(rng));
      if (k < 22) x = ForestValue::infinity();
      if (k < 20) x = -ForestValue::infinity();
      fast.add_path(a, x);
      slow.add_path(a, x);
    } else if (k < 55) {
      ForestValue x = ForestValue::finite(small(rng));
      fast.set_value(a, x);
      slow.set_value(a, x);
    } else if (k < 67) {
      PathTie tie_dir = (k & 1) ? PathTie::Lowest : PathTie::Highest;
      auto p = fast.min_path(a, tie_dir);
      auto q = slow.min_path(a, tie_dir);
      if (p.vertex != q.vertex || p.value != q.value) return -1;
      ++compared;
    } else if (k < 79) {
      TreeTie tie_dir = (k & 1) ? TreeTie::SmallestSubtree : TreeTie::LargestSubtree;
      auto p = fast.min_tree(a, tie_dir);
      auto q = slow.min_tree(a, tie_dir);
      auto e = slow.min_tree_perturbed(a, tie_dir);
      if (p.vertex != q.vertex || p.value != q.value || e.vertex != q.vertex) return -1;
      ++compared;
    } else if (k < 91) {
      if (slow.find_root(b) != slow.find_root(a)) {
        // pick a vertex of a's tree by walking
        b = a;
        for (int s = 0; s < 3 && slow.parent_of(b) != kNoVertex; ++s) b = slow.parent_of(b);
      }
      auto p = fast.min_non_path(a, b);
      auto q = slow.min_non_path(a, b);
      if (p.has_value() != q.has_value()) return -1;
      if (p && (p->vertex != q->vertex || p->value != q->value)) return -1;
      ++compared;
    } else {
      if (fast.find_root(a) != slow.find_root(a)) return -1;
      if (fast.value(a) != slow.value(a)) return -1;
      ++compared;
    }
  }
  return compared;
}


// the same op mix without the reference; returns a checksum so the work is not optimized away
inline std::int64_t run_workload(std::uint64_t seed, VertexId n, int ops) {
  std::mt19937_64 rng(seed);
  std::vector<int> tie(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> sd(1, n);
  for (int& s : tie) s = sd(rng);
  DynForest f(tie);
  std::uniform_int_distribution<VertexId> vd(0, n - 1);
  std::uniform_int_distribution<int> op(0, 99);
  std::uniform_int_distribution<int> small(-3, 3);
  std::int64_t sum = 0;
  for (int i = 0; i < ops; ++i) {
    int k = op(rng);
    VertexId a = vd(rng), b = vd(rng);
    if (k < 25) {
      VertexId ra = f.find_root(a);
      if (f.find_root(b) != ra) f.link(ra, b);
    } else if (k < 35) {
      if (f.parent_of(a) != kNoVertex) f.cut_parent(a);
    } else if (k < 60) {
      f.add_path(a, ForestValue::finite(small(rng)));
    } else if (k < 75) {
      sum += f.min_path(a, (k & 1) ? PathTie::Lowest : PathTie::Highest).vertex;
    } else if (k < 90) {
      sum += f.min_tree(a, (k & 1) ? TreeTie::SmallestSubtree : TreeTie::LargestSubtree).vertex;
    } else {
      VertexId w = f.parent_of(a) == kNoVertex ? a : f.parent_of(a);
      if (auto r = f.min_non_path(a, w)) sum += r->vertex;
    }
  }
  return sum;
}

}  // namespace cactusvine::testing

#endif  // CACTUSVINE_TESTS_FOREST_OPS_HPP
