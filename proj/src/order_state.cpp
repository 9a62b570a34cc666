#include "wcol/order_state.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>

namespace wcol {

OrderState::OrderState(const Graph& g, int radius, int bound)
    : g_(&g), radius_(radius), bound_(bound) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  const int n = g.vertex_count();
  pos_.assign(n, kFree);
  wreach_.assign(n, {});
  wreach_inv_.assign(n, {});
  free_adj_.assign(n, {});
  for (int v = 0; v < n; v++) {
    wreach_[v].insert(v);
    wreach_inv_[v].insert(v);
    for (int w : g.neighbors(v)) free_adj_[v].insert(w);
  }
}

std::vector<int> OrderState::free_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < g_->vertex_count(); v++)
    if (is_free(v)) out.push_back(v);
  return out;
}

std::vector<int> OrderState::overfull_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < g_->vertex_count(); v++)
    if (wreach_size(v) > bound_) out.push_back(v);
  return out;
}

int OrderState::max_wreach_size() const {
  int mx = 0;
  for (int v = 0; v < g_->vertex_count(); v++)
    if (!is_excluded(v)) mx = std::max(mx, wreach_size(v));
  return mx;
}

void OrderState::set_size_changed(int v, int old_size) {
  int now = wreach_size(v);
  if (old_size <= bound_ && now > bound_) overfull_++;
  if (old_size > bound_ && now <= bound_) overfull_--;
}

void OrderState::add_pair(int holder, int member) {
  assert(holder != member);
  int old = wreach_size(holder);
  wreach_[holder].insert(member);
  wreach_inv_[member].insert(holder);
  set_size_changed(holder, old);
}

void OrderState::remove_pair(int holder, int member) {
  assert(holder != member);
  int old = wreach_size(holder);
  wreach_[holder].erase(member);
  wreach_inv_[member].erase(holder);
  set_size_changed(holder, old);
}

void OrderState::strip_free_edges(int v) {
  for (int w : free_adj_[v]) free_adj_[w].erase(v);
  free_adj_[v].clear();
}

void OrderState::restore_free_edges(int v) {
  for (int w : g_->neighbors(v)) {
    if (is_free(w) && w != v) {
      free_adj_[v].insert(w);
      free_adj_[w].insert(v);
    }
  }
}

void OrderState::renumber_from(int slot) {
  for (int i = slot; i < static_cast<int>(order_.size()); i++) pos_[order_[i]] = i;
}

// All x reachable from free v by a path of length <= r inside G[T].
std::vector<int> OrderState::collect_free_ball(int v) const {
  std::vector<int> found;
  std::vector<int> depth(g_->vertex_count(), -1);
  std::queue<int> bfs;
  depth[v] = 0;
  bfs.push(v);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    found.push_back(u);
    if (depth[u] >= radius_) continue;
    for (int w : free_adj_[u]) {
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        bfs.push(w);
      }
    }
  }
  return found;
}

// All x with v in wreach(x): BFS from placed v that traverses free vertices
// and placed vertices strictly right of v.
std::vector<int> OrderState::collect_inset(int v) const {
  assert(is_placed(v));
  const int p = pos_[v];
  std::vector<int> found;
  std::vector<int> depth(g_->vertex_count(), -1);
  std::queue<int> bfs;
  depth[v] = 0;
  bfs.push(v);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    found.push_back(u);
    if (depth[u] >= radius_) continue;
    for (int w : g_->neighbors(u)) {
      if (depth[w] >= 0 || is_excluded(w)) continue;
      if (is_placed(w) && pos_[w] <= p) continue;
      depth[w] = depth[u] + 1;
      bfs.push(w);
    }
  }
  return found;
}

// wreach(v) for placed v, from scratch. best[x] tracks, over walks from v of
// length <= r, the largest achievable minimum position among placed walk
// vertices other than x itself; u is weakly reachable iff best[u] >= pos(u).
std::vector<int> OrderState::compute_out_set(int v) const {
  assert(is_placed(v));
  const int n = g_->vertex_count();
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> prev(n, -1), curr(n, -1), best(n, -1);
  prev[v] = inf;
  for (int d = 1; d <= radius_; d++) {
    std::fill(curr.begin(), curr.end(), -1);
    for (int y = 0; y < n; y++) {
      if (prev[y] < 0 || is_excluded(y)) continue;
      int through = std::min(prev[y], is_placed(y) ? pos_[y] : inf);
      for (int x : g_->neighbors(y)) {
        if (is_excluded(x)) continue;
        curr[x] = std::max(curr[x], through);
      }
    }
    for (int x = 0; x < n; x++) best[x] = std::max(best[x], curr[x]);
    std::swap(prev, curr);
  }
  std::vector<int> out{v};
  for (int u = 0; u < n; u++)
    if (u != v && is_placed(u) && best[u] >= pos_[u]) out.push_back(u);
  return out;
}

void OrderState::refresh_inset(int u) {
  std::vector<int> found = collect_inset(u);
  std::unordered_set<int> found_set(found.begin(), found.end());
  std::vector<int> to_remove;
  for (int x : wreach_inv_[u])
    if (x != u && !found_set.count(x)) to_remove.push_back(x);
  for (int x : to_remove) remove_pair(x, u);
  for (int x : found)
    if (x != u && !wreach_inv_[u].count(x)) add_pair(x, u);
}

void OrderState::place_back(int v) {
  if (!is_free(v)) throw std::invalid_argument("place_back: vertex not free");
  std::vector<int> ball = collect_free_ball(v);
  order_.push_back(v);
  pos_[v] = static_cast<int>(order_.size()) - 1;
  strip_free_edges(v);
  for (int x : ball)
    if (x != v) add_pair(x, v);
}

void OrderState::insert_at_slot(int v, int slot) {
  if (!is_free(v)) throw std::invalid_argument("insert: vertex not free");
  if (slot < 0 || slot > placed_count())
    throw std::invalid_argument("insert: slot out of range");
  if (slot == placed_count()) {
    place_back(v);
    return;
  }
  // Witnesses through v that run to a vertex right of the new slot die once
  // v is pinned there; everything left of the slot keeps its witnesses.
  std::vector<int> affected;
  for (int u : wreach_[v])
    if (u != v && is_placed(u) && pos_[u] >= slot) affected.push_back(u);

  order_.insert(order_.begin() + slot, v);
  renumber_from(slot);
  strip_free_edges(v);

  for (int x : collect_inset(v))
    if (x != v) add_pair(x, v);
  for (int u : affected) refresh_inset(u);
}

void OrderState::insert_before(int v, int anchor) {
  if (!is_placed(anchor)) throw std::invalid_argument("insert: anchor not placed");
  insert_at_slot(v, pos_[anchor]);
}

void OrderState::insert_after(int v, int anchor) {
  if (!is_placed(anchor)) throw std::invalid_argument("insert: anchor not placed");
  insert_at_slot(v, pos_[anchor] + 1);
}

void OrderState::remove_at(int v) {
  if (!is_placed(v)) throw std::invalid_argument("remove_at: vertex not placed");
  const int p = pos_[v];
  // Once v is free again, paths through it may serve vertices that were
  // right of it; those are exactly the placed members of wreach_inv(v).
  std::vector<int> affected;
  for (int u : wreach_inv_[v])
    if (u != v && is_placed(u) && pos_[u] > p) affected.push_back(u);

  std::vector<int> holders(wreach_inv_[v].begin(), wreach_inv_[v].end());
  for (int x : holders)
    if (x != v) remove_pair(x, v);

  order_.erase(order_.begin() + p);
  renumber_from(p);
  pos_[v] = kFree;
  restore_free_edges(v);

  for (int u : affected) refresh_inset(u);
}

void OrderState::exclude(int v) {
  if (!is_free(v)) throw std::invalid_argument("exclude: vertex not free");
  std::vector<int> members;
  for (int u : wreach_[v])
    if (u != v) members.push_back(u);
  for (int u : members) remove_pair(v, u);
  strip_free_edges(v);
  pos_[v] = kExcluded;
  for (int u : members) refresh_inset(u);
}

void OrderState::place_from_excluded(int v, int slot) {
  if (!is_excluded(v)) throw std::invalid_argument("place_from_excluded: vertex not excluded");
  if (slot < 0 || slot > placed_count())
    throw std::invalid_argument("place_from_excluded: slot out of range");
  order_.insert(order_.begin() + slot, v);
  renumber_from(slot);

  std::vector<int> out = compute_out_set(v);
  for (int u : out)
    if (u != v) add_pair(v, u);
  for (int x : collect_inset(v))
    if (x != v) add_pair(x, v);
  // v became traversable, which can create witnesses between other pairs;
  // every such pair reaches a member of wreach(v).
  for (int u : out)
    if (u != v) refresh_inset(u);
}

void OrderState::remove_to_excluded(int v) {
  if (!is_placed(v)) throw std::invalid_argument("remove_to_excluded: vertex not placed");
  const int p = pos_[v];
  std::vector<int> members;
  for (int u : wreach_[v])
    if (u != v) members.push_back(u);
  for (int u : members) remove_pair(v, u);
  std::vector<int> holders(wreach_inv_[v].begin(), wreach_inv_[v].end());
  for (int x : holders)
    if (x != v) remove_pair(x, v);

  order_.erase(order_.begin() + p);
  renumber_from(p);
  pos_[v] = kExcluded;

  for (int u : members) refresh_inset(u);
}

void OrderState::reset() {
  const int n = g_->vertex_count();
  order_.clear();
  overfull_ = 0;
  for (int v = 0; v < n; v++) {
    pos_[v] = kFree;
    wreach_[v].clear();
    wreach_[v].insert(v);
    wreach_inv_[v].clear();
    wreach_inv_[v].insert(v);
    free_adj_[v].clear();
  }
  for (int v = 0; v < n; v++)
    for (int w : g_->neighbors(v)) free_adj_[v].insert(w);
}

void OrderState::rebuild(const std::vector<int>& order) {
  reset();
  for (int v : order) place_back(v);
}

bool OrderState::operator==(const OrderState& other) const {
  return g_ == other.g_ && radius_ == other.radius_ && bound_ == other.bound_ &&
         order_ == other.order_ && pos_ == other.pos_ &&
         overfull_ == other.overfull_ && wreach_ == other.wreach_ &&
         wreach_inv_ == other.wreach_inv_ && free_adj_ == other.free_adj_;
}

FullOrderingEval evaluate_full_ordering(const Graph& g, int radius,
                                        const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("ordering is not a permutation of V(G)");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; i++) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0)
      throw std::invalid_argument("ordering is not a permutation of V(G)");
    pos[v] = i;
  }
  if (n == 0) return {0, -1};

  std::vector<int> count(n, 1);  // every vertex reaches itself
  std::vector<int> depth(n);
  std::queue<int> bfs;
  for (int u = 0; u < n; u++) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[u] = 0;
    bfs.push(u);
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      if (x != u) count[x]++;
      if (depth[x] >= radius) continue;
      for (int w : g.neighbors(x)) {
        if (depth[w] < 0 && pos[w] > pos[u]) {
          depth[w] = depth[x] + 1;
          bfs.push(w);
        }
      }
    }
  }
  FullOrderingEval eval;
  for (int v = 0; v < n; v++) {
    if (count[v] > eval.wcol) {
      eval.wcol = count[v];
      eval.witness = v;
    }
  }
  return eval;
}

std::vector<std::unordered_set<int>> subordering_wreach_sets(
    const Graph& g, int radius, const std::vector<int>& order,
    const std::vector<char>* in_graph) {
  const int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(order.size()); i++) pos[order[i]] = i;
  auto present = [&](int v) { return in_graph == nullptr || (*in_graph)[v]; };

  std::vector<std::unordered_set<int>> sets(n);
  for (int v = 0; v < n; v++) sets[v].insert(v);

  std::vector<int> depth(n);
  std::queue<int> bfs;
  for (int u : order) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[u] = 0;
    bfs.push(u);
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      if (x != u) sets[x].insert(u);
      if (depth[x] >= radius) continue;
      for (int w : g.neighbors(x)) {
        if (depth[w] >= 0 || !present(w)) continue;
        if (pos[w] >= 0 && pos[w] <= pos[u]) continue;
        depth[w] = depth[x] + 1;
        bfs.push(w);
      }
    }
  }
  return sets;
}

}  // namespace wcol
