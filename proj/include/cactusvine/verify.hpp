#ifndef CACTUSVINE_VERIFY_HPP
#define CACTUSVINE_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cactusvine/cactus.hpp"
#include "cactusvine/oracle.hpp"
#include "cactusvine/pipeline.hpp"

namespace cactusvine {

// 1-indexed, matching the input file
inline std::string show_cut(const CutSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) out += (i ? "," : "") + std::to_string(s.members()[i] + 1);
  return out + "}";
}

struct CactusReport {
  bool ok = true;
  std::size_t expected = 0;
  std::size_t found = 0;
  std::vector<CutSet> missing;
  std::vector<CutSet> extra;
  std::vector<std::string> structural;
};

inline CactusReport verify_cactus(const WeightedGraph& g, const Cactus& c, const MincutInventory& inv) {
  CactusReport r;
  r.structural = check_cactus_structure(c).problems;
  std::vector<CutSet> got = enumerate_cactus_cuts(c);
  r.expected = inv.all_mincuts.size();
  r.found = got.size();
  std::set_difference(inv.all_mincuts.begin(), inv.all_mincuts.end(), got.begin(), got.end(),
                      std::back_inserter(r.missing));
  std::set_difference(got.begin(), got.end(), inv.all_mincuts.begin(), inv.all_mincuts.end(),
                      std::back_inserter(r.extra));
  if (c.lambda != inv.lambda) r.structural.push_back("lambda " + wide_to_string(c.lambda) + " differs from " +
                                                     wide_to_string(inv.lambda));
  (void)g;
  r.ok = r.missing.empty() && r.extra.empty() && r.structural.empty();
  return r;
}

inline CactusReport verify_cactus(const WeightedGraph& g, const Cactus& c) { return verify_cactus(g, c, brute_mincuts(g)); }

struct LabelReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
};

inline LabelReport verify_labels(const WeightedGraph& g, const TreePacking& p, const ItemLabels& labels,
                                 const MincutInventory& inv) {
  LabelReport r;
  auto show = [](const std::optional<CutSet>& c) { return c ? show_cut(*c) : std::string("none"); };
  auto check = [&](const MaybeLabel& l, const std::optional<CutSet>& want, const std::string& item) {
    ++r.checked;
    std::optional<CutSet> got;
    if (l) got = materialize(*l, p.trees.at(l->tree));
    if (got != want) r.mismatches.push_back(item + ": label " + show(got) + ", oracle " + show(want));
  };
  for (VertexId v = 0; v < g.n(); ++v) check(labels.vertex[v], inv.minimal_by_vertex[v], "vertex " + std::to_string(v + 1));
  for (EdgeId e = 0; e < g.m(); ++e) check(labels.edge[e], inv.minimal_by_edge[e], "edge " + std::to_string(e + 1));
  r.ok = r.mismatches.empty();
  return r;
}

inline LabelReport verify_labels(const WeightedGraph& g, const TreePacking& p, const ItemLabels& labels) {
  return verify_labels(g, p, labels, brute_mincuts(g));
}

}  // namespace cactusvine

#endif  // CACTUSVINE_VERIFY_HPP
