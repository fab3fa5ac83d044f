#include <iostream>

#include "cactusvine/cactusvine.hpp"

namespace cv = cactusvine;

int main() {
  // two unit 4-cycles sharing vertex 0, plus a pendant pair of weight 2
  std::vector<cv::Edge> edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 4, 1},
                                 {4, 5, 1}, {5, 6, 1}, {6, 0, 1}, {2, 7, 2}};
  cv::WeightedGraph g(8, edges, 0);

  cv::SolveConfig cfg;
  cfg.strategy = cv::PackingStrategy::Exhaustive;
  cv::Solution s = cv::solve(g, cfg);

  std::cout << "lambda = " << cv::wide_to_string(s.lambda) << "\n";
  std::cout << "mincuts = " << cv::wide_to_string(cv::count_cactus_cuts(s.cactus)) << "\n";
  for (const cv::CutSet& c : cv::enumerate_cactus_cuts(s.cactus)) std::cout << "  " << cv::show_cut(c) << "\n";

  // smallest mincut keeping edge (2,7) on one side
  const cv::MaybeLabel& l = s.labels.edge[8];
  if (l) std::cout << "edge 9 lies in " << cv::show_cut(cv::materialize(*l, s.packing.trees[l->tree])) << "\n";

  std::cout << cv::cactus_to_json(s.cactus).dump(2) << "\n";
  return cv::verify_cactus(g, s.cactus).ok ? 0 : 1;
}
