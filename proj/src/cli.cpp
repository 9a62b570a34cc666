#include "wcol/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcol/bounds.hpp"
#include "wcol/driver.hpp"
#include "wcol/graph.hpp"
#include "wcol/oracle.hpp"
#include "wcol/order_state.hpp"

namespace wcol {

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitIncompatible = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string instance_name(const std::string& path) {
  if (path == "-") return "stdin";
  return std::filesystem::path(path).stem().string();
}

std::vector<int> read_ordering(const std::string& path, const Graph& g) {
  std::string text = read_input(path);
  std::istringstream in(text);
  std::vector<int> order;
  std::int64_t label;
  while (in >> label) {
    auto idx = g.index_of_label(label);
    if (!idx) throw std::runtime_error("ordering mentions unknown vertex " +
                                       std::to_string(label));
    order.push_back(*idx);
  }
  return order;
}

void write_ordering(const std::string& path, const Graph& g,
                    const std::vector<int>& order) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (int v : order) out << g.label(v) << "\n";
}

struct OptimizeArgs {
  std::string instance;
  int radius = 2;
  std::string heuristic = "wreach";
  std::string turbo = "none";
  double timeout = 300.0;
  std::uint64_t seed = 0;
  std::string order_out;
  std::string stats_out;
  int target = -1;
  int merge_attempts = 10;
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& out, std::ostream& err) {
  auto heuristic = heuristic_from_string(a.heuristic);
  auto turbo = turbo_from_string(a.turbo);
  if (!heuristic || !turbo) {
    err << "error: unknown heuristic or turbocharger name\n";
    return kExitInputError;
  }
  if (!compatible(*heuristic, *turbo)) {
    err << "error: --heuristic " << a.heuristic << " cannot be paired with --turbo "
        << a.turbo << "\n";
    return kExitIncompatible;
  }
  Graph g = parse_graph(read_input(a.instance));

  RunConfig cfg;
  cfg.radius = a.radius;
  cfg.heuristic = *heuristic;
  cfg.turbo = *turbo;
  cfg.timeout_seconds = a.timeout >= 0 ? std::optional<double>(a.timeout)
                                       : std::nullopt;
  cfg.seed = a.seed;
  if (a.target >= 1) cfg.initial_target = a.target;
  cfg.merge_attempts = a.merge_attempts;

  OptimizeResult res = optimize(g, cfg);
  out << "baseline wcol_" << a.radius << " = " << res.stats.baseline_k << "\n";
  out << "final wcol_" << a.radius << " = " << res.wcol << " (lower bound "
      << res.stats.lower_bound << ", " << res.stats.total_ms << " ms, "
      << res.stats.cnt_tc << " turbocharger calls)\n";

  if (!a.order_out.empty()) write_ordering(a.order_out, g, res.order);
  if (!a.stats_out.empty()) {
    StatsMeta meta{instance_name(a.instance), g.vertex_count(), g.edge_count(),
                   a.radius, a.heuristic, a.turbo, a.seed};
    std::ofstream sink(a.stats_out);
    if (!sink) throw std::runtime_error("cannot write " + a.stats_out);
    emit_stats(res.stats, meta, sink);
  }
  return 0;
}

int cmd_verify(const std::string& instance, int radius,
               const std::string& order_path, std::ostream& out) {
  Graph g = parse_graph(read_input(instance));
  std::vector<int> order = read_ordering(order_path, g);
  FullOrderingEval eval = evaluate_full_ordering(g, radius, order);
  out << "wcol_" << radius << " = " << eval.wcol;
  if (eval.witness >= 0) out << " (witness " << g.label(eval.witness) << ")";
  out << "\n";
  return 0;
}

int cmd_oracle(const std::string& instance, int radius, int limit,
               std::ostream& out) {
  Graph g = parse_graph(read_input(instance));
  ExactWcolResult res = exact_wcol(g, radius, limit);
  out << "wcol_" << radius << " = " << res.wcol << "\n";
  out << "ordering:";
  for (int v : res.order) out << " " << g.label(v);
  out << "\n";
  return 0;
}

int cmd_lower_bound(const std::string& instance, int radius,
                    const std::string& method, bool trace, std::ostream& out) {
  Graph g = parse_graph(read_input(instance));
  if (method == "degeneracy") {
    int d = degeneracy(g).value;
    out << "lower bound = " << (g.vertex_count() > 0 ? d + 1 : 0)
        << " (degeneracy " << d << ")\n";
    return 0;
  }
  MmdPlusResult res = wcol_mmd_plus_detailed(g, radius);
  out << "lower bound = " << res.bound << "\n";
  if (trace)
    for (const auto& line : res.trace) out << line << "\n";
  return 0;
}

}  // namespace

void emit_stats(const RunStats& stats, const StatsMeta& meta, std::ostream& sink) {
  nlohmann::json j;
  j["instance"] = meta.instance;
  j["n"] = meta.n;
  j["m"] = meta.m;
  j["r"] = meta.r;
  j["heuristic"] = meta.heuristic;
  j["turbo"] = meta.turbo;
  j["seed"] = meta.seed;
  j["final_k"] = stats.final_k;
  j["baseline_k"] = stats.baseline_k;
  j["lower_bound"] = stats.lower_bound;
  j["cnt_tc"] = stats.cnt_tc;
  j["nodes_total"] = stats.nodes_total;
  j["time_in_tc_ms"] = stats.time_in_tc_ms;
  j["total_ms"] = stats.total_ms;
  j["invocations"] = nlohmann::json::array();
  for (const auto& inv : stats.invocations) {
    j["invocations"].push_back({{"c", inv.c},
                                {"nodes", inv.nodes},
                                {"depth", inv.depth},
                                {"depth_over_c", inv.depth_over_c()},
                                {"success", inv.success}});
  }
  j["timeline"] = nlohmann::json::array();
  for (const auto& point : stats.timeline)
    j["timeline"].push_back({{"elapsed_ms", point.elapsed_ms}, {"k", point.k}});
  sink << j.dump(2) << "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"vertex orderings with small weak r-coloring number"};
  app.require_subcommand(1);

  OptimizeArgs oa;
  auto* opt = app.add_subcommand("optimize",
                                 "turbocharged heuristic optimization loop");
  opt->add_option("instance", oa.instance, "edge-list file, or - for stdin")
      ->required();
  opt->add_option("--radius", oa.radius, "radius r")->check(CLI::PositiveNumber);
  opt->add_option("--heuristic", oa.heuristic,
                  "degree-lr | wreach | sreach | degree-rl");
  opt->add_option("--turbo", oa.turbo, "none | ic | merge | ic-rl");
  opt->add_option("--timeout", oa.timeout,
                  "seconds for the turbocharged phase; negative disables");
  opt->add_option("--seed", oa.seed, "rng seed");
  opt->add_option("--order-out", oa.order_out, "write the final ordering here");
  opt->add_option("--stats-out", oa.stats_out, "write the stats JSON here");
  opt->add_option("--target", oa.target, "first k to attempt");
  opt->add_option("--merge-attempts", oa.merge_attempts,
                  "random S2 draws per merge repair")
      ->check(CLI::PositiveNumber);

  std::string v_instance, v_order;
  int v_radius = 2;
  auto* ver = app.add_subcommand("verify", "certify the wcol of an ordering");
  ver->add_option("instance", v_instance)->required();
  ver->add_option("--radius", v_radius)->check(CLI::PositiveNumber);
  ver->add_option("--order", v_order, "ordering file, one label per line")
      ->required();

  std::string o_instance;
  int o_radius = 2, o_limit = 9;
  auto* orc = app.add_subcommand("oracle", "exact wcol for tiny instances");
  orc->add_option("instance", o_instance)->required();
  orc->add_option("--radius", o_radius)->check(CLI::PositiveNumber);
  orc->add_option("--limit", o_limit, "refuse graphs with more vertices");

  std::string l_instance, l_method = "mmd+";
  int l_radius = 2;
  bool l_trace = false;
  auto* low = app.add_subcommand("lower-bound", "lower bounds on wcol_r");
  low->add_option("instance", l_instance)->required();
  low->add_option("--radius", l_radius)->check(CLI::PositiveNumber);
  low->add_option("--method", l_method, "degeneracy | mmd+")
      ->check(CLI::IsMember({"degeneracy", "mmd+"}));
  low->add_flag("--trace", l_trace, "print the contraction trace");

  std::vector<const char*> argv;
  argv.push_back("wcolorder");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*opt) return cmd_optimize(oa, out, err);
    if (*ver) return cmd_verify(v_instance, v_radius, v_order, out);
    if (*orc) return cmd_oracle(o_instance, o_radius, o_limit, out);
    if (*low) return cmd_lower_bound(l_instance, l_radius, l_method, l_trace, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wcol
