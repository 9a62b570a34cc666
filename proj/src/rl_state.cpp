#include "wcol/rl_state.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace wcol {

RLState::RLState(const Graph& g, int radius, int bound)
    : g_(&g), radius_(radius), bound_(bound) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  rank_.assign(g.vertex_count(), kFree);
  pots_.assign(g.vertex_count(), {});
  pots_inv_.assign(g.vertex_count(), {});
}

std::vector<int> RLState::free_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < g_->vertex_count(); v++)
    if (is_free(v)) out.push_back(v);
  return out;
}

int RLState::leftmost() const {
  if (order_rev_.empty()) throw std::logic_error("leftmost: empty subordering");
  return order_rev_.back();
}

std::vector<int> RLState::order_left_to_right() const {
  return {order_rev_.rbegin(), order_rev_.rend()};
}

const std::unordered_set<int>& RLState::potsreach(int v) const {
  if (!is_placed(v)) throw std::invalid_argument("potsreach: vertex not placed");
  return pots_[v];
}

const std::unordered_set<int>& RLState::potsreach_inv(int v) const {
  return pots_inv_[v];
}

// BFS from src through placed vertices; free vertices are absorbed as leaves.
// src itself is expanded regardless of status.
void RLState::ball_from(int src, std::vector<std::pair<int, int>>& placed_hits,
                        std::vector<std::pair<int, int>>& free_hits) const {
  std::vector<int> depth(g_->vertex_count(), -1);
  std::queue<int> bfs;
  depth[src] = 0;
  bfs.push(src);
  placed_hits.push_back({src, 0});
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    if (depth[x] >= radius_) continue;
    for (int w : g_->neighbors(x)) {
      if (depth[w] >= 0) continue;
      depth[w] = depth[x] + 1;
      if (is_placed(w)) {
        placed_hits.push_back({w, depth[w]});
        bfs.push(w);
      } else {
        free_hits.push_back({w, depth[w]});
      }
    }
  }
}

void RLState::try_add(int holder, int member, Undo& undo) {
  if (!pots_[holder].insert(member).second) return;
  pots_inv_[member].insert(holder);
  undo.added.push_back({holder, member});
  if (static_cast<int>(pots_[holder].size()) == bound_ + 1) overfull_++;
}

void RLState::prepend(int v) {
  if (!is_free(v)) throw std::invalid_argument("prepend: vertex not free");
  rank_[v] = static_cast<int>(order_rev_.size());
  order_rev_.push_back(v);

  // v is the new leftmost vertex, so it is the only vertex that can newly
  // become weakly reachable inside G[S], and every new free member sits at
  // the end of a placed path running through v.
  std::vector<std::pair<int, int>> placed_hits, free_hits;
  ball_from(v, placed_hits, free_hits);

  Undo undo{v, {}};
  for (auto [w, dw] : placed_hits) {
    try_add(w, v, undo);
    for (auto [u, du] : free_hits)
      if (dw + du <= radius_) try_add(w, u, undo);
  }
  undo_.push_back(std::move(undo));
}

void RLState::unprepend() {
  if (order_rev_.empty()) throw std::logic_error("unprepend: empty subordering");
  Undo undo = std::move(undo_.back());
  undo_.pop_back();
  int v = order_rev_.back();
  assert(undo.v == v);
  order_rev_.pop_back();
  for (auto [holder, member] : undo.added) {
    if (static_cast<int>(pots_[holder].size()) == bound_ + 1) overfull_--;
    pots_[holder].erase(member);
    pots_inv_[member].erase(holder);
  }
  rank_[v] = kFree;
  assert(pots_[v].empty());
}

int RLState::score_if_prepended(int u) const {
  if (!is_free(u)) throw std::invalid_argument("score_if_prepended: vertex not free");
  std::vector<std::pair<int, int>> placed_hits, free_hits;
  ball_from(u, placed_hits, free_hits);
  return 1 + static_cast<int>(free_hits.size());
}

bool RLState::operator==(const RLState& other) const {
  return g_ == other.g_ && radius_ == other.radius_ && bound_ == other.bound_ &&
         order_rev_ == other.order_rev_ && rank_ == other.rank_ &&
         overfull_ == other.overfull_ && pots_ == other.pots_ &&
         pots_inv_ == other.pots_inv_;
}

}  // namespace wcol
