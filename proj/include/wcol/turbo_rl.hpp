#ifndef WCOL_TURBO_RL_HPP
#define WCOL_TURBO_RL_HPP

#include "wcol/rl_state.hpp"
#include "wcol/run_stats.hpp"

namespace wcol {

/// Right-to-left counterpart of the suffix-replacement turbocharger: removes
/// the min(c, |S|) leftmost vertices of a non-extendable right-to-left
/// subordering and refills the freed block rightmost-first with free
/// vertices, candidates ordered by ascending distance to the vertex that was
/// leftmost at the point of regret. Pruned on non-extendability; state is
/// restored exactly on failure or timeout.
TcOutcome turbocharge_rl(RLState& st, int c, const DistanceTable& dist,
                         Deadline deadline, RunStats& stats);

}  // namespace wcol

#endif
