#include "wcol/turbo_merge.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace wcol {

namespace {

// Leftmost placed vertex strictly right of min_pos from which v would be
// weakly reachable, i.e. the leftmost placed vertex in the ball of radius r
// around v that traverses only free vertices and placed vertices right of
// min_pos. The start is traversed regardless of its status.
int next_breakpoint(const OrderState& st, int v, int min_pos) {
  const Graph& g = st.graph();
  std::vector<int> depth(g.vertex_count(), -1);
  std::queue<int> bfs;
  depth[v] = 0;
  bfs.push(v);
  int best = -1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    if (depth[x] >= st.radius()) continue;
    for (int w : g.neighbors(x)) {
      if (depth[w] >= 0 || st.is_excluded(w)) continue;
      if (st.is_placed(w) && st.position(w) <= min_pos) continue;
      depth[w] = depth[x] + 1;
      bfs.push(w);
      if (st.is_placed(w) && (best < 0 || st.position(w) < st.position(best)))
        best = w;
    }
  }
  return best;
}

std::vector<int> breakpoints_walk(const OrderState& st, int v, int limit) {
  std::vector<int> bps;
  int min_pos = -1;
  while (static_cast<int>(bps.size()) < limit) {
    int b = next_breakpoint(st, v, min_pos);
    if (b < 0) break;
    bps.push_back(b);
    min_pos = st.position(b);
  }
  return bps;
}

OrderState build_instance_state(const MergeInstance& inst,
                                const std::vector<int>& excluded) {
  OrderState st(*inst.g, inst.radius, inst.bound);
  for (int v : excluded) st.exclude(v);
  for (int v : inst.s1_order) st.place_back(v);
  return st;
}

struct MergeSearch {
  OrderState st;
  std::vector<int> s2;
  std::vector<char> placed_s2;
  Deadline deadline;
  RunStats& stats;
  long long nodes = 0;
  int max_depth = 0;
  int depth = 0;

  // Forced future members: u in S2 lands in wreach(x) of every free x within
  // distance r of u in G[T u {u}] as soon as u is placed anywhere. forced[x]
  // counts the not-yet-placed contributors.
  std::vector<int> forced;
  std::vector<std::vector<int>> forced_hits;  // per s2 position
  std::vector<int> watched;                   // free x with any contributor

  MergeSearch(const MergeInstance& inst, Deadline deadline, RunStats& stats)
      : st(build_instance_state(inst, inst.s2)),
        s2(inst.s2),
        placed_s2(inst.s2.size(), 0),
        deadline(deadline),
        stats(stats),
        forced(inst.g->vertex_count(), 0),
        forced_hits(inst.s2.size()) {
    const Graph& g = *inst.g;
    std::vector<int> dist(g.vertex_count());
    for (size_t i = 0; i < s2.size(); i++) {
      std::fill(dist.begin(), dist.end(), -1);
      std::queue<int> bfs;
      dist[s2[i]] = 0;
      bfs.push(s2[i]);
      while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        if (dist[x] >= st.radius()) continue;
        for (int w : g.neighbors(x)) {
          if (dist[w] >= 0 || !st.is_free(w)) continue;
          dist[w] = dist[x] + 1;
          bfs.push(w);
          forced_hits[i].push_back(w);
          if (forced[w]++ == 0) watched.push_back(w);
        }
      }
    }
  }

  bool within_bounds() const {
    if (!st.is_extendable()) return false;
    for (int x : watched)
      if (st.wreach_size(x) + forced[x] > st.bound()) return false;
    return true;
  }

  enum class Result { found, exhausted, timed_out };

  Result try_child(size_t i, int slot) {
    st.place_from_excluded(s2[i], slot);
    for (int x : forced_hits[i]) forced[x]--;
    Result r = Result::exhausted;
    if (within_bounds()) {
      placed_s2[i] = 1;
      depth++;
      max_depth = std::max(max_depth, depth);
      r = recurse();
      depth--;
      placed_s2[i] = 0;
    }
    if (r != Result::found) {
      for (int x : forced_hits[i]) forced[x]++;
      st.remove_to_excluded(s2[i]);
    }
    return r;
  }

  Result recurse() {
    nodes++;
    if (deadline_passed(deadline)) return Result::timed_out;
    bool all_placed = true;
    for (char p : placed_s2) all_placed &= p != 0;
    if (all_placed) return Result::found;

    for (size_t i = 0; i < s2.size(); i++) {
      if (placed_s2[i]) continue;
      int v = s2[i];
      std::vector<int> bps = breakpoints_walk(st, v, st.bound());
      int children = 0;
      for (int b : bps) {
        Result r = try_child(i, st.position(b));
        children++;
        if (r != Result::exhausted) {
          stats.max_merge_children = std::max(stats.max_merge_children, children);
          return r;
        }
      }
      if (static_cast<int>(bps.size()) < st.bound()) {
        Result r = try_child(i, st.placed_count());
        children++;
        if (r != Result::exhausted) {
          stats.max_merge_children = std::max(stats.max_merge_children, children);
          return r;
        }
      }
      stats.max_merge_children = std::max(stats.max_merge_children, children);
    }
    return Result::exhausted;
  }
};

}  // namespace

std::vector<int> breakpoints_of(const MergeInstance& inst, int v, int limit) {
  if (std::find(inst.s2.begin(), inst.s2.end(), v) == inst.s2.end())
    throw std::invalid_argument("breakpoints_of: vertex not in S2");
  std::vector<int> excluded;
  for (int u : inst.s2)
    if (u != v) excluded.push_back(u);
  OrderState st = build_instance_state(inst, excluded);
  return breakpoints_walk(st, v, limit);
}

MergeResult recursive_merge(const MergeInstance& inst, Deadline deadline,
                            RunStats& stats) {
  MergeSearch search(inst, deadline, stats);
  MergeResult res;
  MergeSearch::Result r = search.within_bounds()
                              ? search.recurse()
                              : MergeSearch::Result::exhausted;
  res.nodes = search.nodes;
  res.max_depth = search.max_depth;
  if (r == MergeSearch::Result::found) {
    res.outcome = TcOutcome::success;
    res.order = search.st.order();
  } else if (r == MergeSearch::Result::timed_out) {
    res.outcome = TcOutcome::timeout;
  } else {
    res.outcome = TcOutcome::failure;
  }
  return res;
}

TcOutcome turbocharge_merge(OrderState& st, int c, std::mt19937_64& rng,
                            int attempts, Deadline deadline, RunStats& stats) {
  if (c <= 0) throw std::invalid_argument("turbocharge_merge: c must be positive");
  if (st.is_extendable())
    throw std::invalid_argument("turbocharge_merge: subordering is extendable");
  auto started = Clock::now();
  const Graph& g = st.graph();
  const int n = g.vertex_count();

  std::unordered_set<int> pool_set;
  for (int v : st.overfull_vertices())
    for (int u : st.wreach(v)) pool_set.insert(u);
  std::vector<int> pool(pool_set.begin(), pool_set.end());
  std::sort(pool.begin(), pool.end());
  std::vector<int> rest;
  for (int v = 0; v < n; v++)
    if (!pool_set.count(v)) rest.push_back(v);

  const int target_size = std::min(c, n);
  TcInvocation inv{c, 0, 1, false};
  TcOutcome outcome = TcOutcome::failure;

  for (int attempt = 0; attempt < attempts; attempt++) {
    if (deadline_passed(deadline)) {
      outcome = TcOutcome::timeout;
      break;
    }
    std::vector<int> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.resize(std::min<size_t>(shuffled.size(), target_size));
    if (static_cast<int>(shuffled.size()) < target_size) {
      std::vector<int> pad = rest;
      std::shuffle(pad.begin(), pad.end(), rng);
      pad.resize(target_size - shuffled.size());
      shuffled.insert(shuffled.end(), pad.begin(), pad.end());
    }
    std::unordered_set<int> x_set(shuffled.begin(), shuffled.end());

    MergeInstance inst;
    inst.g = &g;
    inst.radius = st.radius();
    inst.bound = st.bound();
    for (int v : st.order())
      if (!x_set.count(v)) inst.s1_order.push_back(v);
    inst.s2 = shuffled;
    std::sort(inst.s2.begin(), inst.s2.end());

    MergeResult res = recursive_merge(inst, deadline, stats);
    inv.nodes += res.nodes;
    inv.depth = std::max(inv.depth, res.max_depth);
    if (res.outcome == TcOutcome::success) {
      st.rebuild(res.order);
      outcome = TcOutcome::success;
      break;
    }
    if (res.outcome == TcOutcome::timeout) {
      outcome = TcOutcome::timeout;
      break;
    }
  }

  inv.success = outcome == TcOutcome::success;
  stats.record(inv);
  stats.time_in_tc_ms += std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - started)
                             .count();
  return outcome;
}

}  // namespace wcol
