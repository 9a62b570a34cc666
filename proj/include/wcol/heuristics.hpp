#ifndef WCOL_HEURISTICS_HPP
#define WCOL_HEURISTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wcol/order_state.hpp"
#include "wcol/rl_state.hpp"

namespace wcol {

enum class Heuristic { degree_lr, wreach_lr, sreach_rl, degree_rl };

bool is_left_to_right(Heuristic h);
std::string to_string(Heuristic h);
std::optional<Heuristic> heuristic_from_string(const std::string& name);

/// Greedy selection among the free vertices. degree_lr takes the largest
/// static degree, wreach_lr the largest |wreach| with ties broken by
/// descending degree. All remaining ties go to the lowest internal index.
int next_vertex(const OrderState& st, Heuristic kind);

/// Right-to-left selection: sreach_rl minimizes |potsreach| after placement,
/// degree_rl takes the smallest static degree. Ties: lowest index.
int next_vertex(const RLState& st, Heuristic kind);

/// While the state stays extendable and some free vertex already has
/// |wreach| equal to the bound, place it at the right end (lowest index
/// first). Placing such a vertex immediately never loses a solution; its set
/// cannot grow any further.
void immediate_full_placements(OrderState& st);

struct PlainRun {
  std::vector<int> order;
  int wcol = 0;
};

/// Full ordering built by repeatedly applying next_vertex (appending for LR
/// kinds, prepending for RL kinds), with its exact certified wcol.
PlainRun run_plain(const Graph& g, int radius, Heuristic kind);

}  // namespace wcol

#endif
