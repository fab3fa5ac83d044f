#ifndef CACTUSVINE_IO_HPP
#define CACTUSVINE_IO_HPP

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cactusvine/cactus.hpp"
#include "cactusvine/error.hpp"
#include "cactusvine/pipeline.hpp"
#include "cactusvine/tree_packing.hpp"

namespace cactusvine {

using json = nlohmann::ordered_json;

// vertices are 1-indexed in every serialized form, cactus node ids are 0-indexed

inline json wide_to_json(Wide x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return wide_to_string(x);
}

inline json cactus_to_json(const Cactus& c) {
  json out;
  out["lambda"] = wide_to_json(c.lambda);
  json nodes = json::array();
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    json vs = json::array();
    for (VertexId v : c.nodes[i]) vs.push_back(v + 1);
    nodes.push_back({{"id", i}, {"vertices", std::move(vs)}});
  }
  out["nodes"] = std::move(nodes);
  json bridges = json::array();
  for (auto [a, b] : c.bridges) bridges.push_back({a, b});
  out["bridges"] = std::move(bridges);
  out["cycles"] = c.cycles;
  return out;
}

inline std::string cactus_to_dot(const Cactus& c) {
  std::ostringstream out;
  out << "graph cactus {\n  label=\"lambda = " << wide_to_string(c.lambda) << "\";\n  node [shape=box];\n";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"";
    for (std::size_t j = 0; j < c.nodes[i].size(); ++j) out << (j ? " " : "") << c.nodes[i][j] + 1;
    out << "\"" << (c.nodes[i].empty() ? ", shape=point" : "") << "];\n";
  }
  for (auto [a, b] : c.bridges) out << "  n" << a << " -- n" << b << " [penwidth=2];\n";
  for (const auto& cyc : c.cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i)
      out << "  n" << cyc[i] << " -- n" << cyc[(i + 1) % cyc.size()] << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

inline Cactus cactus_from_json(const json& j, const WeightedGraph& g) {
  auto fail = [](const std::string& msg) -> void { throw Error(ErrorCode::MalformedInput, "cactus file: " + msg); };
  Cactus c;
  c.n = g.n();
  try {
    const json& lam = j.at("lambda");
    c.lambda = lam.is_string() ? static_cast<Wide>(std::stoll(lam.get<std::string>())) : lam.get<std::int64_t>();
    const json& nodes = j.at("nodes");
    c.nodes.assign(nodes.size(), {});
    c.node_of.assign(static_cast<std::size_t>(g.n()), -1);
    for (const json& node : nodes) {
      auto id = node.at("id").get<std::int64_t>();
      if (id < 0 || id >= static_cast<std::int64_t>(nodes.size())) fail("node id out of range");
      for (const json& v : node.at("vertices")) {
        auto x = v.get<std::int64_t>() - 1;
        if (x < 0 || x >= g.n()) fail("vertex out of range");
        if (c.node_of[x] >= 0) fail("vertex on two nodes");
        c.node_of[x] = static_cast<int>(id);
        c.nodes[id].push_back(static_cast<VertexId>(x));
      }
    }
    for (const json& b : j.at("bridges")) c.bridges.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
    for (const json& cyc : j.at("cycles")) c.cycles.push_back(cyc.get<std::vector<int>>());
  } catch (const json::exception& e) {
    fail(e.what());
  } catch (const std::logic_error& e) {
    fail(e.what());
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (c.node_of[v] < 0) fail("vertex " + std::to_string(v + 1) + " missing");
  auto in_range = [&](int x) { return x >= 0 && x < static_cast<int>(c.nodes.size()); };
  for (auto [a, b] : c.bridges)
    if (!in_range(a) || !in_range(b)) fail("bridge refers to a missing node");
  for (const auto& cyc : c.cycles)
    for (int x : cyc)
      if (!in_range(x)) fail("cycle refers to a missing node");
  c.root_node = c.node_of[g.root()];
  return c;
}

inline json label_to_json(const std::string& item, const MaybeLabel& l) {
  json out;
  out["item"] = item;
  if (!l) {
    out["kind"] = nullptr;
    return out;
  }
  out["kind"] = to_string(l->kind);
  out["v"] = l->v + 1;
  out["w"] = l->w == kNoVertex ? json(nullptr) : json(l->w + 1);
  out["tree"] = l->tree;
  out["size"] = l->size;
  return out;
}

inline json labels_to_json(const WeightedGraph& g, Wide lambda, const TreePacking& p, const ItemLabels& labels) {
  json out;
  out["lambda"] = wide_to_json(lambda);
  out["packing"] = {{"strategy", to_string(p.strategy)}, {"seed", p.seed}, {"trees", p.trees.size()}};
  json items = json::array();
  for (VertexId v = 0; v < g.n(); ++v) items.push_back(label_to_json("v" + std::to_string(v + 1), labels.vertex[v]));
  for (EdgeId e = 0; e < g.m(); ++e) items.push_back(label_to_json("e" + std::to_string(e + 1), labels.edge[e]));
  out["labels"] = std::move(items);
  return out;
}

}  // namespace cactusvine

#endif  // CACTUSVINE_IO_HPP
