#include "wcol/turbo_rl.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcol {

namespace {

enum class SearchResult { found, exhausted, timed_out };

struct RlSearch {
  RLState& st;
  const std::vector<int>& candidates;
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
      st.prepend(u);
      if (st.is_extendable()) {
        SearchResult r = fill(depth + 1);
        if (r == SearchResult::found) return r;
        st.unprepend();
        if (r == SearchResult::timed_out) return r;
      } else {
        st.unprepend();
      }
    }
    return SearchResult::exhausted;
  }
};

}  // namespace

TcOutcome turbocharge_rl(RLState& st, int c, const DistanceTable& dist,
                         Deadline deadline, RunStats& stats) {
  if (c <= 0) throw std::invalid_argument("turbocharge_rl: c must be positive");
  if (st.is_extendable())
    throw std::invalid_argument("turbocharge_rl: subordering is extendable");
  auto started = Clock::now();

  const int regret_vertex = st.leftmost();
  const int slots = std::min(c, st.placed_count());
  std::vector<int> removed;  // leftmost first
  for (int i = 0; i < slots; i++) {
    removed.push_back(st.leftmost());
    st.unprepend();
  }

  std::vector<int> candidates = st.free_vertices();
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    int da = dist.at(a, regret_vertex), db = dist.at(b, regret_vertex);
    return da != db ? da < db : a < b;
  });

  RlSearch search{st, candidates, slots, deadline};
  // potsreach sets only grow under left extensions; an overfull remainder
  // stays overfull no matter what fills the block.
  SearchResult result =
      st.is_extendable() ? search.fill(0) : SearchResult::exhausted;

  TcOutcome outcome;
  if (result == SearchResult::found) {
    outcome = TcOutcome::success;
  } else {
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) st.prepend(*it);
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
