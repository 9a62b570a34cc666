#ifndef WCOL_TURBO_IC_HPP
#define WCOL_TURBO_IC_HPP

#include "wcol/order_state.hpp"
#include "wcol/run_stats.hpp"

namespace wcol {

/// Replaces the last min(c, |S|) vertices of a non-extendable subordering
/// with (possibly different) free vertices so that it becomes extendable
/// again, by a depth-first search that fills the freed slots left to right.
/// Candidates are tried in ascending distance from the vertex that was
/// rightmost when the point of regret was hit; a branch is cut as soon as
/// the partial subordering is non-extendable. On failure or timeout the
/// state is restored exactly.
TcOutcome turbocharge_ic(OrderState& st, int c, const DistanceTable& dist,
                         Deadline deadline, RunStats& stats);

}  // namespace wcol

#endif
