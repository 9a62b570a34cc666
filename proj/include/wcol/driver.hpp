#ifndef WCOL_DRIVER_HPP
#define WCOL_DRIVER_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wcol/graph.hpp"
#include "wcol/heuristics.hpp"
#include "wcol/run_stats.hpp"

namespace wcol {

enum class Turbo { none, ic, merge, ic_rl };

std::string to_string(Turbo t);
std::optional<Turbo> turbo_from_string(const std::string& name);

/// ic and merge repair left-to-right constructions; ic-rl repairs the
/// right-to-left ones. none pairs with everything.
bool compatible(Heuristic h, Turbo t);

struct RunConfig {
  int radius = 2;
  Heuristic heuristic = Heuristic::wreach_lr;
  Turbo turbo = Turbo::none;
  std::optional<double> timeout_seconds = 300.0;  // nullopt: run to proven optimum
  std::uint64_t seed = 0;
  std::optional<int> initial_target;  // first k to attempt instead of baseline-1
  int merge_attempts = 10;
};

struct AttemptResult {
  TcOutcome outcome = TcOutcome::failure;
  std::vector<int> order;
  int wcol = 0;
};

/// One turbocharged construction against the bound k: runs the heuristic
/// step loop and invokes the configured turbocharger with parameter c at
/// every point of regret. Fails as soon as one repair fails. On success the
/// returned ordering is certified with wcol <= k.
AttemptResult run_turbocharged(const Graph& g, int radius, Heuristic heuristic,
                               Turbo turbo, int k, int c,
                               const DistanceTable* dist, std::mt19937_64& rng,
                               Deadline deadline, int merge_attempts,
                               RunStats& stats);

struct OptimizeResult {
  std::vector<int> order;
  int wcol = 0;
  RunStats stats;
};

/// The full optimization loop: a plain baseline run fixes the starting k;
/// then targets k-1 with the turbocharged heuristic, escalating the
/// reconstruction parameter c by one after each failed attempt, restarting
/// at c = 1 after each success. The timer starts after the baseline; on
/// timeout the best certified ordering so far is returned. Without a
/// timeout the loop stops once an attempt with c >= |V(G)| fails, which is
/// an exhaustive proof that the current k is optimal.
OptimizeResult optimize(const Graph& g, const RunConfig& cfg);

}  // namespace wcol

#endif
