#include "wcol/driver.hpp"

#include <stdexcept>

#include "wcol/order_state.hpp"
#include "wcol/rl_state.hpp"
#include "wcol/turbo_ic.hpp"
#include "wcol/turbo_merge.hpp"
#include "wcol/turbo_rl.hpp"

namespace wcol {

std::string to_string(Turbo t) {
  switch (t) {
    case Turbo::none: return "none";
    case Turbo::ic: return "ic";
    case Turbo::merge: return "merge";
    case Turbo::ic_rl: return "ic-rl";
  }
  return "?";
}

std::optional<Turbo> turbo_from_string(const std::string& name) {
  if (name == "none") return Turbo::none;
  if (name == "ic") return Turbo::ic;
  if (name == "merge") return Turbo::merge;
  if (name == "ic-rl") return Turbo::ic_rl;
  return std::nullopt;
}

bool compatible(Heuristic h, Turbo t) {
  if (t == Turbo::none) return true;
  if (t == Turbo::ic_rl) return !is_left_to_right(h);
  return is_left_to_right(h);
}

namespace {

AttemptResult run_turbocharged_lr(const Graph& g, int radius, Heuristic heuristic,
                                  Turbo turbo, int k, int c,
                                  const DistanceTable* dist,
                                  std::mt19937_64& rng, Deadline deadline,
                                  int merge_attempts, RunStats& stats) {
  const int n = g.vertex_count();
  OrderState st(g, radius, k);
  while (true) {
    if (deadline_passed(deadline)) return {TcOutcome::timeout, {}, 0};
    if (heuristic == Heuristic::degree_lr) immediate_full_placements(st);
    if (!st.is_extendable()) {
      TcOutcome repaired;
      switch (turbo) {
        case Turbo::ic:
          repaired = turbocharge_ic(st, c, *dist, deadline, stats);
          break;
        case Turbo::merge:
          repaired = turbocharge_merge(st, c, rng, merge_attempts, deadline, stats);
          break;
        default:
          repaired = TcOutcome::failure;
      }
      if (repaired != TcOutcome::success) return {repaired, {}, 0};
      continue;
    }
    if (st.placed_count() == n) break;
    st.place_back(next_vertex(st, heuristic));
  }
  AttemptResult res{TcOutcome::success, st.order(), 0};
  res.wcol = evaluate_full_ordering(g, radius, res.order).wcol;
  if (res.wcol > k) throw std::logic_error("certified wcol exceeds the bound");
  return res;
}

AttemptResult run_turbocharged_rl(const Graph& g, int radius, Heuristic heuristic,
                                  Turbo turbo, int k, int c,
                                  const DistanceTable* dist, Deadline deadline,
                                  RunStats& stats) {
  const int n = g.vertex_count();
  RLState st(g, radius, k);
  while (true) {
    if (deadline_passed(deadline)) return {TcOutcome::timeout, {}, 0};
    if (!st.is_extendable()) {
      TcOutcome repaired = turbo == Turbo::ic_rl
                               ? turbocharge_rl(st, c, *dist, deadline, stats)
                               : TcOutcome::failure;
      if (repaired != TcOutcome::success) return {repaired, {}, 0};
      continue;
    }
    if (st.placed_count() == n) break;
    st.prepend(next_vertex(st, heuristic));
  }
  AttemptResult res{TcOutcome::success, st.order_left_to_right(), 0};
  res.wcol = evaluate_full_ordering(g, radius, res.order).wcol;
  if (res.wcol > k) throw std::logic_error("certified wcol exceeds the bound");
  return res;
}

}  // namespace

AttemptResult run_turbocharged(const Graph& g, int radius, Heuristic heuristic,
                               Turbo turbo, int k, int c,
                               const DistanceTable* dist, std::mt19937_64& rng,
                               Deadline deadline, int merge_attempts,
                               RunStats& stats) {
  if (!compatible(heuristic, turbo))
    throw std::invalid_argument("incompatible heuristic/turbocharger pair");
  if ((turbo == Turbo::ic || turbo == Turbo::ic_rl) && dist == nullptr)
    throw std::invalid_argument("distance table required for ic turbochargers");
  if (g.vertex_count() == 0) return {TcOutcome::success, {}, 0};
  if (is_left_to_right(heuristic))
    return run_turbocharged_lr(g, radius, heuristic, turbo, k, c, dist, rng,
                               deadline, merge_attempts, stats);
  return run_turbocharged_rl(g, radius, heuristic, turbo, k, c, dist, deadline,
                             stats);
}

OptimizeResult optimize(const Graph& g, const RunConfig& cfg) {
  auto started = Clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 started)
        .count();
  };

  OptimizeResult result;
  PlainRun baseline = run_plain(g, cfg.radius, cfg.heuristic);
  result.order = baseline.order;
  result.wcol = baseline.wcol;
  result.stats.baseline_k = baseline.wcol;
  result.stats.lower_bound = g.vertex_count() > 0 ? degeneracy(g).value + 1 : 0;
  result.stats.timeline.push_back({elapsed_ms(), baseline.wcol});

  const int n = g.vertex_count();
  if (cfg.turbo == Turbo::none || n == 0) {
    result.stats.final_k = result.wcol;
    result.stats.total_ms = elapsed_ms();
    return result;
  }

  // The timer runs over the turbocharged phase only; the baseline is kept
  // whatever happens.
  Deadline deadline = no_deadline();
  if (cfg.timeout_seconds)
    deadline = Clock::now() + std::chrono::microseconds(static_cast<long long>(
                                  *cfg.timeout_seconds * 1e6));

  DistanceTable dist;
  if (cfg.turbo == Turbo::ic || cfg.turbo == Turbo::ic_rl)
    dist = all_pairs_distances(g);
  std::mt19937_64 rng(cfg.seed);

  int k = result.wcol;
  if (cfg.initial_target) k = std::min(k, *cfg.initial_target + 1);
  bool stop = false;
  while (!stop && k > 1) {
    const int target = k - 1;
    int c = 1;
    while (true) {
      if (deadline_passed(deadline)) {
        stop = true;
        break;
      }
      AttemptResult attempt =
          run_turbocharged(g, cfg.radius, cfg.heuristic, cfg.turbo, target, c,
                           &dist, rng, deadline, cfg.merge_attempts,
                           result.stats);
      if (attempt.outcome == TcOutcome::success) {
        result.order = attempt.order;
        result.wcol = attempt.wcol;
        k = attempt.wcol;
        result.stats.timeline.push_back({elapsed_ms(), k});
        break;
      }
      if (attempt.outcome == TcOutcome::timeout) {
        stop = true;
        break;
      }
      if (c >= n) {
        // Exhausted with the whole vertex set replaceable: no ordering of
        // wcol <= target exists, k is optimal.
        stop = true;
        break;
      }
      c++;
    }
  }

  result.stats.final_k = result.wcol;
  result.stats.total_ms = elapsed_ms();
  return result;
}

}  // namespace wcol
