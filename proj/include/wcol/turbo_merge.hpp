#ifndef WCOL_TURBO_MERGE_HPP
#define WCOL_TURBO_MERGE_HPP

#include <random>
#include <vector>

#include "wcol/order_state.hpp"
#include "wcol/run_stats.hpp"

namespace wcol {

/// A WCOL-Merge instance: the kept subordering L_{S1}, the vertices S2 to be
/// merged into it, and implicitly the free vertices T = V \ (S1 u S2).
struct MergeInstance {
  const Graph* g = nullptr;
  int radius = 1;
  int bound = 1;
  std::vector<int> s1_order;  // left to right
  std::vector<int> s2;        // ascending internal index
};

/// The leftmost `limit` breakpoints of v w.r.t. L_{S1} in G[S1 u T u {v}],
/// left to right. A breakpoint is a placed vertex s such that inserting v
/// directly before s versus directly after s changes wreach(v). Enumerated
/// by walking v rightward: with v directly after the last breakpoint found,
/// the next one is the leftmost placed vertex right of v from which v is
/// weakly reachable.
std::vector<int> breakpoints_of(const MergeInstance& inst, int v, int limit);

struct MergeResult {
  TcOutcome outcome = TcOutcome::failure;
  std::vector<int> order;  // extendable subordering of S1 u S2 on success
  long long nodes = 0;     // recursion calls entered
  int max_depth = 0;       // most S2 vertices simultaneously placed
};

/// Recursive search for an extendable subordering of S1 u S2 that agrees
/// with L_{S1} on S1. For each unplaced v in S2 it tries inserting directly
/// before each of the at most `bound` relevant breakpoints and at the right
/// end, pruning a branch once any wreach set (including forced future
/// members of free vertices' sets) exceeds the bound. Complete: failure
/// means no such subordering exists.
MergeResult recursive_merge(const MergeInstance& inst, Deadline deadline,
                            RunStats& stats);

/// Repairs a non-extendable subordering by repeatedly (up to `attempts`
/// times) drawing a random vertex set X from the union of the overfull
/// vertices' wreach sets, padding it with random further vertices up to size
/// c, and solving the WCOL-Merge instance with S2 = X. On first success the
/// state is rebuilt to the merged subordering; otherwise it is left exactly
/// as it was.
TcOutcome turbocharge_merge(OrderState& st, int c, std::mt19937_64& rng,
                            int attempts, Deadline deadline, RunStats& stats);

}  // namespace wcol

#endif
