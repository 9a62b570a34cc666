#include "wcol/turbo_ic.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcol {

namespace {

enum class SearchResult { found, exhausted, timed_out };

struct IcSearch {
  OrderState& st;
  const std::vector<int>& candidates;  // superset of free, in branching order
  int slots;
  Deadline deadline;
  long long nodes = 0;
  int max_depth = 0;

  SearchResult fill(int depth) {
    if (depth == slots) return SearchResult::found;
    for (int u : candidates) {
      if (!st.is_free(u)) continue;
      if (deadline_passed(deadline)) return SearchResult::timed_out;
      nodes++;
      max_depth = std::max(max_depth, depth + 1);
      st.place_back(u);
      if (st.is_extendable()) {
        SearchResult r = fill(depth + 1);
        if (r == SearchResult::found) return r;
        st.remove_at(u);
        if (r == SearchResult::timed_out) return r;
      } else {
        st.remove_at(u);
      }
    }
    return SearchResult::exhausted;
  }
};

}  // namespace

TcOutcome turbocharge_ic(OrderState& st, int c, const DistanceTable& dist,
                         Deadline deadline, RunStats& stats) {
  if (c <= 0) throw std::invalid_argument("turbocharge_ic: c must be positive");
  if (st.is_extendable())
    throw std::invalid_argument("turbocharge_ic: subordering is extendable");
  auto started = Clock::now();

  const int regret_vertex = st.order().back();
  const int slots = std::min(c, st.placed_count());
  std::vector<int> removed(st.order().end() - slots, st.order().end());
  for (int i = 0; i < slots; i++) st.remove_at(st.order().back());

  std::vector<int> candidates = st.free_vertices();
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    int da = dist.at(a, regret_vertex), db = dist.at(b, regret_vertex);
    return da != db ? da < db : a < b;
  });

  IcSearch search{st, candidates, slots, deadline};
  // wreach sets only grow under right extensions, so an already overfull
  // remainder can never be repaired by filling the slots.
  SearchResult result =
      st.is_extendable() ? search.fill(0) : SearchResult::exhausted;

  TcOutcome outcome;
  if (result == SearchResult::found) {
    outcome = TcOutcome::success;
  } else {
    for (int v : removed) st.place_back(v);
    outcome = result == SearchResult::timed_out ? TcOutcome::timeout
                                                : TcOutcome::failure;
  }
  TcInvocation inv{c, search.nodes, std::max(1, search.max_depth),
                   outcome == TcOutcome::success};
  stats.record(inv);
  stats.time_in_tc_ms += std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - started)
                             .count();
  return outcome;
}

}  // namespace wcol
