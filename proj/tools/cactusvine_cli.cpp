#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "cactusvine/cactusvine.hpp"

namespace cv = cactusvine;

namespace {

enum Exit { kOk = 0, kInputError = 1, kVerifyFailed = 2, kRetriesExhausted = 3, kOtherError = 4 };

struct RunConfig {
  std::string input = "-";
  long long root = 0;
  std::string packing;
  int rounds = 0;
  std::uint64_t seed = 1;
  int retries = 3;
  std::string output;
  std::string format = "json";
  bool verify = false;
  int threads = 1;
  std::string cactus_file;
};

std::shared_ptr<spdlog::logger> make_logger() {
  auto log = spdlog::stderr_logger_st("cactusvine");
  log->set_pattern("[%l] %v");
  const char* env = std::getenv("CACTUSVINE_LOG");
  log->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
  return log;
}

cv::WeightedGraph load_graph(const RunConfig& cfg) {
  cv::WeightedGraph g;
  if (cfg.input.empty() || cfg.input == "-") {
    g = cv::parse_graph(std::cin);
  } else {
    std::ifstream in(cfg.input);
    if (!in) throw cv::Error(cv::ErrorCode::MalformedInput, "cannot read " + cfg.input);
    g = cv::parse_graph(in);
  }
  if (cfg.root != 0) {
    if (cfg.root < 1 || cfg.root > g.n()) throw cv::Error(cv::ErrorCode::MalformedInput, "root out of range");
    g = g.with_root(static_cast<cv::VertexId>(cfg.root - 1));
  }
  return g;
}

cv::SolveConfig solve_config(const RunConfig& cfg, const cv::WeightedGraph& g, spdlog::logger& log) {
  cv::SolveConfig s;
  if (cfg.packing.empty())
    s.strategy = g.n() <= 10 ? cv::PackingStrategy::Exhaustive : cv::PackingStrategy::Greedy;
  else
    s.strategy = cfg.packing == "exhaustive" ? cv::PackingStrategy::Exhaustive : cv::PackingStrategy::Greedy;
  s.rounds = cfg.rounds;
  s.seed = cfg.seed;
  s.retries = cfg.retries;
  s.threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  s.log = [&log](const std::string& msg) { log.info("{}", msg); };
  log.info("n={} m={} root={} packing={} seed={}", g.n(), g.m(), g.root() + 1, cv::to_string(s.strategy), s.seed);
  return s;
}

void write_artifact(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
}

// summary goes to stdout unless the artifact already does
std::ostream& summary_stream(const RunConfig& cfg) {
  return cfg.output.empty() || cfg.output == "-" ? std::cerr : std::cout;
}

bool report_cactus(std::ostream& out, const cv::CactusReport& r) {
  out << "cactus cuts " << r.found << ", oracle " << r.expected << ", missing " << r.missing.size() << ", extra "
      << r.extra.size() << "\n";
  for (const auto& s : r.missing) out << "  missing " << cv::show_cut(s) << "\n";
  for (const auto& s : r.extra) out << "  extra " << cv::show_cut(s) << "\n";
  for (const auto& p : r.structural) out << "  structure: " << p << "\n";
  return r.ok;
}

bool report_labels(std::ostream& out, const cv::LabelReport& r) {
  out << "labels checked " << r.checked << ", mismatched " << r.mismatches.size() << "\n";
  for (const auto& m : r.mismatches) out << "  " << m << "\n";
  return r.ok;
}

void require_oracle_size(const cv::WeightedGraph& g) {
  if (g.n() > cv::kOracleMaxVertices)
    throw cv::Error(cv::ErrorCode::TooLarge, "verification supports at most " + std::to_string(cv::kOracleMaxVertices) +
                                                 " vertices, got " + std::to_string(g.n()));
}

int cmd_cactus(const RunConfig& cfg, spdlog::logger& log) {
  cv::WeightedGraph g = load_graph(cfg);
  if (cfg.verify) require_oracle_size(g);
  cv::Solution s = cv::solve(g, solve_config(cfg, g, log));
  write_artifact(cfg, cfg.format == "dot" ? cv::cactus_to_dot(s.cactus) : cv::cactus_to_json(s.cactus).dump(2) + "\n");
  std::ostream& out = summary_stream(cfg);
  cv::CactusStats st = cv::cactus_stats(s.cactus);
  out << "lambda " << cv::wide_to_string(s.lambda) << "\n";
  out << "cactus nodes " << st.nodes << ", bridges " << st.bridges << ", cycles " << st.cycles << ", longest cycle "
      << st.longest_cycle << "\n";
  out << "mincuts " << cv::wide_to_string(cv::count_cactus_cuts(s.cactus)) << "\n";
  if (!cfg.verify) return kOk;
  bool ok = report_cactus(out, cv::verify_cactus(g, s.cactus));
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_labels(const RunConfig& cfg, spdlog::logger& log) {
  if (cfg.format != "json") throw cv::Error(cv::ErrorCode::MalformedInput, "labels are only emitted as json");
  cv::WeightedGraph g = load_graph(cfg);
  if (cfg.verify) require_oracle_size(g);
  cv::Solution s = cv::solve(g, solve_config(cfg, g, log));
  write_artifact(cfg, cv::labels_to_json(g, s.lambda, s.packing, s.labels).dump(2) + "\n");
  std::ostream& out = summary_stream(cfg);
  out << "lambda " << cv::wide_to_string(s.lambda) << "\n";
  if (!cfg.verify) return kOk;
  bool ok = report_labels(out, cv::verify_labels(g, s.packing, s.labels));
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const RunConfig& cfg, spdlog::logger& log) {
  cv::WeightedGraph g = load_graph(cfg);
  require_oracle_size(g);
  cv::MincutInventory inv = cv::brute_mincuts(g);
  std::ostream& out = std::cout;
  out << "oracle lambda " << cv::wide_to_string(inv.lambda) << ", mincuts " << inv.all_mincuts.size() << "\n";
  bool ok = true;
  if (!cfg.cactus_file.empty()) {
    std::ifstream in(cfg.cactus_file);
    if (!in) throw cv::Error(cv::ErrorCode::MalformedInput, "cannot read " + cfg.cactus_file);
    cv::json j;
    try {
      j = cv::json::parse(in);
    } catch (const cv::json::exception& e) {
      throw cv::Error(cv::ErrorCode::MalformedInput, std::string("cactus file: ") + e.what());
    }
    ok = report_cactus(out, cv::verify_cactus(g, cv::cactus_from_json(j, g), inv));
  } else {
    cv::Solution s = cv::solve(g, solve_config(cfg, g, log));
    out << "lambda " << cv::wide_to_string(s.lambda) << "\n";
    ok = report_labels(out, cv::verify_labels(g, s.packing, s.labels, inv)) && ok;
    ok = report_cactus(out, cv::verify_cactus(g, s.cactus, inv)) && ok;
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-i,--input", cfg.input, "graph file (DIMACS-like), - for stdin");
  sub->add_option("-r,--root", cfg.root, "root vertex (1-indexed)")->check(CLI::PositiveNumber);
  sub->add_option("--packing", cfg.packing, "tree packing strategy (default: exhaustive when n <= 10)")
      ->check(CLI::IsMember({"greedy", "exhaustive"}));
  sub->add_option("--rounds", cfg.rounds, "greedy packing rounds (0 = ceil(3 ln n))")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", cfg.seed, "greedy packing seed");
  sub->add_option("--retries", cfg.retries, "extra greedy attempts with seed+1, seed+2, ...")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--threads", cfg.threads, "worker threads for per-tree labeling (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cactusvine: global minimum cut value and cactus of all minimum cuts"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* cactus = app.add_subcommand("cactus", "compute the cactus of all minimum cuts");
  add_common(cactus, cfg);
  cactus->add_option("-o,--output", cfg.output, "artifact path (default stdout)");
  cactus->add_option("--format", cfg.format, "artifact format")->check(CLI::IsMember({"json", "dot"}));
  cactus->add_flag("--verify", cfg.verify, "compare against brute force (n <= 20)");

  CLI::App* labels = app.add_subcommand("labels", "emit the minimal mincut label of every vertex and edge");
  add_common(labels, cfg);
  labels->add_option("-o,--output", cfg.output, "artifact path (default stdout)");
  labels->add_option("--format", cfg.format, "artifact format")->check(CLI::IsMember({"json", "dot"}));
  labels->add_flag("--verify", cfg.verify, "compare against brute force (n <= 20)");

  CLI::App* verify = app.add_subcommand("verify", "run the pipeline, or check a cactus file, against brute force");
  add_common(verify, cfg);
  verify->add_option("-c,--cactus", cfg.cactus_file, "cactus JSON to check instead of running the pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  auto log = make_logger();
  try {
    if (*cactus) return cmd_cactus(cfg, *log);
    if (*labels) return cmd_labels(cfg, *log);
    return cmd_verify(cfg, *log);
  } catch (const cv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case cv::ErrorCode::MalformedInput:
      case cv::ErrorCode::NonPositiveWeight:
      case cv::ErrorCode::Disconnected:
        return kInputError;
      case cv::ErrorCode::PackingRetriesExhausted:
        return kRetriesExhausted;
      default:
        return kOtherError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOtherError;
  }
}
