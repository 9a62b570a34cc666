#include "wcol/heuristics.hpp"

#include <stdexcept>

namespace wcol {

bool is_left_to_right(Heuristic h) {
  return h == Heuristic::degree_lr || h == Heuristic::wreach_lr;
}

std::string to_string(Heuristic h) {
  switch (h) {
    case Heuristic::degree_lr: return "degree-lr";
    case Heuristic::wreach_lr: return "wreach";
    case Heuristic::sreach_rl: return "sreach";
    case Heuristic::degree_rl: return "degree-rl";
  }
  return "?";
}

std::optional<Heuristic> heuristic_from_string(const std::string& name) {
  if (name == "degree-lr") return Heuristic::degree_lr;
  if (name == "wreach") return Heuristic::wreach_lr;
  if (name == "sreach") return Heuristic::sreach_rl;
  if (name == "degree-rl") return Heuristic::degree_rl;
  return std::nullopt;
}

int next_vertex(const OrderState& st, Heuristic kind) {
  if (!is_left_to_right(kind))
    throw std::invalid_argument("next_vertex: not a left-to-right heuristic");
  const Graph& g = st.graph();
  int best = -1;
  for (int v = 0; v < g.vertex_count(); v++) {
    if (!st.is_free(v)) continue;
    if (best < 0) {
      best = v;
      continue;
    }
    if (kind == Heuristic::degree_lr) {
      if (g.degree(v) > g.degree(best)) best = v;
    } else {
      if (st.wreach_size(v) > st.wreach_size(best) ||
          (st.wreach_size(v) == st.wreach_size(best) &&
           g.degree(v) > g.degree(best)))
        best = v;
    }
  }
  if (best < 0) throw std::invalid_argument("next_vertex: no free vertex");
  return best;
}

int next_vertex(const RLState& st, Heuristic kind) {
  if (is_left_to_right(kind))
    throw std::invalid_argument("next_vertex: not a right-to-left heuristic");
  const Graph& g = st.graph();
  int best = -1;
  int best_score = 0;
  for (int v = 0; v < g.vertex_count(); v++) {
    if (!st.is_free(v)) continue;
    int score = kind == Heuristic::degree_rl ? g.degree(v) : st.score_if_prepended(v);
    if (best < 0 || score < best_score) {
      best = v;
      best_score = score;
    }
  }
  if (best < 0) throw std::invalid_argument("next_vertex: no free vertex");
  return best;
}

void immediate_full_placements(OrderState& st) {
  const int n = st.graph().vertex_count();
  while (st.is_extendable()) {
    int pick = -1;
    for (int v = 0; v < n; v++) {
      if (st.is_free(v) && st.wreach_size(v) == st.bound()) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    st.place_back(pick);
  }
}

PlainRun run_plain(const Graph& g, int radius, Heuristic kind) {
  const int n = g.vertex_count();
  if (n == 0) return {{}, 0};
  PlainRun run;
  if (is_left_to_right(kind)) {
    OrderState st(g, radius, n);
    for (int i = 0; i < n; i++) st.place_back(next_vertex(st, kind));
    run.order = st.order();
  } else {
    RLState st(g, radius, n);
    for (int i = 0; i < n; i++) st.prepend(next_vertex(st, kind));
    run.order = st.order_left_to_right();
  }
  run.wcol = evaluate_full_ordering(g, radius, run.order).wcol;
  return run;
}

}  // namespace wcol
