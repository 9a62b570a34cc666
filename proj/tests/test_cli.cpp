#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "wcol/cli.hpp"

using namespace wcol;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("wcol_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& content = "") {
    fs::path p = dir / name;
    if (!content.empty()) {
      std::ofstream out(p);
      out << content;
    }
    return p.string();
  }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

const char* kGrid = R"(p 9 12
1 2
2 3
4 5
5 6
7 8
8 9
1 4
4 7
2 5
5 8
3 6
6 9
)";

int scrape_int(const std::string& text, const std::string& prefix) {
  auto at = text.find(prefix);
  REQUIRE(at != std::string::npos);
  return std::stoi(text.substr(at + prefix.size()));
}

}  // namespace

TEST_CASE("optimize, verify round-trip, stats schema") {
  TempDir tmp;
  std::string instance = tmp.file("grid.gr", kGrid);
  std::string order_path = tmp.file("grid.order");
  std::string stats_path = tmp.file("grid.json");

  std::string out;
  int code = run({"optimize", instance, "--radius", "2", "--heuristic", "wreach",
                  "--turbo", "merge", "--timeout", "5", "--seed", "3",
                  "--order-out", order_path, "--stats-out", stats_path},
                 &out);
  REQUIRE(code == 0);
  int final_k = scrape_int(out, "final wcol_2 = ");

  std::string vout;
  REQUIRE(run({"verify", instance, "--radius", "2", "--order", order_path},
              &vout) == 0);
  CHECK(scrape_int(vout, "wcol_2 = ") == final_k);

  std::ifstream in(stats_path);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["instance"] == "grid");
  CHECK(j["n"] == 9);
  CHECK(j["m"] == 12);
  CHECK(j["r"] == 2);
  CHECK(j["heuristic"] == "wreach");
  CHECK(j["turbo"] == "merge");
  CHECK(j["seed"] == 3);
  CHECK(j["final_k"] == final_k);
  CHECK(j["baseline_k"].get<int>() >= final_k);
  CHECK(j["lower_bound"].get<int>() >= 0);
  CHECK(j["cnt_tc"].get<long long>() >= 0);
  CHECK(j["nodes_total"].get<long long>() >= 0);
  CHECK(j["time_in_tc_ms"].get<long long>() >= 0);
  CHECK(j["total_ms"].get<long long>() >= 0);
  CHECK(j["invocations"].size() == j["cnt_tc"].get<size_t>());
  for (const auto& inv : j["invocations"]) {
    CHECK(inv["c"].get<int>() >= 1);
    CHECK(inv["nodes"].get<long long>() >= 0);
    CHECK(inv["depth_over_c"].get<double>() > 0.0);
    CHECK(inv["depth_over_c"].get<double>() <= 1.0);
  }
  REQUIRE(j["timeline"].size() >= 1);
  CHECK(j["timeline"][0]["k"] == j["baseline_k"]);
  for (size_t i = 1; i < j["timeline"].size(); i++)
    CHECK(j["timeline"][i]["k"].get<int>() < j["timeline"][i - 1]["k"].get<int>());
}

TEST_CASE("stats record of a run without turbocharging") {
  TempDir tmp;
  std::string instance = tmp.file("grid.gr", kGrid);
  std::string stats_path = tmp.file("plain.json");
  REQUIRE(run({"optimize", instance, "--radius", "2", "--heuristic", "degree-lr",
               "--turbo", "none", "--stats-out", stats_path}) == 0);
  std::ifstream in(stats_path);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["cnt_tc"] == 0);
  CHECK(j["invocations"].empty());
  CHECK(j["timeline"].size() == 1);
  CHECK(j["final_k"] == j["baseline_k"]);
}

TEST_CASE("incompatible pair exits with 3") {
  TempDir tmp;
  std::string instance = tmp.file("e.gr", "1 2\n");
  std::string err;
  CHECK(run({"optimize", instance, "--heuristic", "sreach", "--turbo", "merge"},
            nullptr, &err) == 3);
  CHECK(err.find("--turbo") != std::string::npos);
  CHECK(run({"optimize", instance, "--heuristic", "degree-lr", "--turbo",
             "ic-rl", "--timeout", "1"},
            nullptr, &err) == 3);
}

TEST_CASE("input errors exit with 2") {
  TempDir tmp;
  std::string bad = tmp.file("bad.gr", "1 1\n");
  std::string err;
  CHECK(run({"optimize", bad, "--timeout", "1"}, nullptr, &err) == 2);
  CHECK(err.find("line 1") != std::string::npos);
  CHECK(run({"optimize", tmp.file("missing.gr"), "--timeout", "1"}, nullptr,
            &err) == 2);
  CHECK(run({"optimize"}, nullptr, &err) == 2);          // missing instance
  CHECK(run({"optimize", bad, "--bogus"}, nullptr, &err) == 2);
  CHECK(run({}, nullptr, &err) == 2);                    // no subcommand
}

TEST_CASE("oracle subcommand") {
  TempDir tmp;
  std::string instance = tmp.file("k3.gr", "1 2\n2 3\n1 3\n");
  std::string out;
  REQUIRE(run({"oracle", instance, "--radius", "2"}, &out) == 0);
  CHECK(scrape_int(out, "wcol_2 = ") == 3);

  std::ostringstream big;
  for (int i = 1; i <= 10; i++) big << i << " " << i + 1 << "\n";
  std::string large = tmp.file("p11.gr", big.str());
  std::string err;
  CHECK(run({"oracle", large}, nullptr, &err) == 2);  // over the limit
  CHECK(run({"oracle", large, "--limit", "11"}, &out) == 0);
}

TEST_CASE("lower-bound subcommand") {
  TempDir tmp;
  std::string instance = tmp.file("c6.gr", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
  std::string out;
  REQUIRE(run({"lower-bound", instance, "--method", "degeneracy"}, &out) == 0);
  CHECK(scrape_int(out, "lower bound = ") == 3);
  REQUIRE(run({"lower-bound", instance, "--radius", "5", "--method", "mmd+",
               "--trace"},
              &out) == 0);
  CHECK(scrape_int(out, "lower bound = ") == 3);
  CHECK(out.find("contract") != std::string::npos);
}

TEST_CASE("verify rejects non-permutations") {
  TempDir tmp;
  std::string instance = tmp.file("e.gr", "1 2\n");
  std::string short_order = tmp.file("short.order", "1\n");
  std::string unknown = tmp.file("unknown.order", "1\n5\n");
  std::string err;
  CHECK(run({"verify", instance, "--order", short_order}, nullptr, &err) == 2);
  CHECK(run({"verify", instance, "--order", unknown}, nullptr, &err) == 2);
}

TEST_CASE("help exits cleanly") {
  std::string out;
  CHECK(run({"--help"}, &out) == 0);
  CHECK(out.find("optimize") != std::string::npos);
}
