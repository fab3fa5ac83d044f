#ifndef CACTUSVINE_SOLVER_HPP
#define CACTUSVINE_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cactusvine/cactus.hpp"
#include "cactusvine/error.hpp"
#include "cactusvine/pipeline.hpp"
#include "cactusvine/tree_packing.hpp"

namespace cactusvine {

struct SolveConfig {
  PackingStrategy strategy = PackingStrategy::Greedy;
  int rounds = 0;  // 0 picks ceil(3 ln n)
  std::uint64_t seed = 1;
  int retries = 3;
  int threads = 1;
  std::function<void(const std::string&)> log;
};

struct Solution {
  Wide lambda = 0;
  TreePacking packing;
  ItemLabels labels;
  Hierarchy hierarchy;
  Cactus cactus;
  int attempts = 0;
  std::uint64_t seed_used = 0;
};

// packing, labels and cactus, retrying greedy packings that show evidence of a missed mincut
inline Solution solve(const WeightedGraph& g, const SolveConfig& cfg) {
  auto note = [&](const std::string& msg) {
    if (cfg.log) cfg.log(msg);
  };
  const int attempts = cfg.strategy == PackingStrategy::Exhaustive ? 1 : 1 + std::max(0, cfg.retries);
  std::string last_reason;
  for (int a = 0; a < attempts; ++a) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(a);
    Solution s;
    s.attempts = a + 1;
    s.seed_used = seed;
    s.packing = pack_trees(g, cfg.strategy, cfg.rounds, seed);
    note("attempt " + std::to_string(a + 1) + ": " + std::to_string(s.packing.trees.size()) + " trees");
    LabelingResult r = label_all(g, s.packing, cfg.threads);
    s.lambda = r.lambda;
    if (auto why = packing_suspicion(g, r)) {
      last_reason = *why;
      note("retrying: " + last_reason);
      continue;
    }
    s.labels = std::move(r.labels);
    try {
      LabelIndex index(s.packing, g.n());
      s.hierarchy = build_hierarchy(g, s.labels, s.packing, index);
    } catch (const Error& e) {
      if (cfg.strategy == PackingStrategy::Exhaustive) throw;
      last_reason = e.what();
      note("retrying: " + last_reason);
      continue;
    }
    s.cactus = hierarchy_to_cactus(s.hierarchy, s.lambda);
    return s;
  }
  throw Error(ErrorCode::PackingRetriesExhausted, "packing retries exhausted: " + last_reason);
}

}  // namespace cactusvine

#endif  // CACTUSVINE_SOLVER_HPP
