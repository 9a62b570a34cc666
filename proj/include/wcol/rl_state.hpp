#ifndef WCOL_RL_STATE_HPP
#define WCOL_RL_STATE_HPP

#include <unordered_set>
#include <vector>

#include "wcol/graph.hpp"

namespace wcol {

/// Subordering grown right-to-left (new vertices are prepended at the left
/// front) with maintained potentially strongly r-reachable sets: u belongs
/// to potsreach(v) for placed v iff u is weakly r-reachable from v inside
/// G[S], or there is a path of length <= r from v to u whose only free
/// vertex is u itself. The sets never shrink as the subordering grows
/// leftward, and once S = V(G) they coincide with the wreach sets of the
/// full ordering.
///
/// Mutations are strictly LIFO: unprepend() undoes the latest prepend().
class RLState {
public:
  static constexpr int kFree = -1;

  RLState(const Graph& g, int radius, int bound);

  const Graph& graph() const { return *g_; }
  int radius() const { return radius_; }
  int bound() const { return bound_; }

  int placed_count() const { return static_cast<int>(order_rev_.size()); }
  bool is_placed(int v) const { return rank_[v] >= 0; }
  bool is_free(int v) const { return rank_[v] == kFree; }
  std::vector<int> free_vertices() const;
  /// Most recently prepended vertex; requires a nonempty subordering.
  int leftmost() const;
  std::vector<int> order_left_to_right() const;

  const std::unordered_set<int>& potsreach(int v) const;
  const std::unordered_set<int>& potsreach_inv(int v) const;
  int potsreach_size(int v) const { return static_cast<int>(pots_[v].size()); }

  /// True iff every placed vertex has |potsreach| <= bound.
  bool is_extendable() const { return overfull_ == 0; }
  int overfull_count() const { return overfull_; }

  void prepend(int v);
  void unprepend();

  /// |potsreach(u)| as it would be right after prepend(u); does not mutate.
  int score_if_prepended(int u) const;

  bool operator==(const RLState& other) const;

private:
  struct Undo {
    int v;
    std::vector<std::pair<int, int>> added;  // (holder, member) pairs
  };

  void ball_from(int src, std::vector<std::pair<int, int>>& placed_hits,
                 std::vector<std::pair<int, int>>& free_hits) const;
  void try_add(int holder, int member, Undo& undo);

  const Graph* g_;
  int radius_;
  int bound_;
  std::vector<int> order_rev_;  // placement order; index 0 is the rightmost
  std::vector<int> rank_;       // index into order_rev_, or kFree
  std::vector<std::unordered_set<int>> pots_;
  std::vector<std::unordered_set<int>> pots_inv_;
  std::vector<Undo> undo_;
  int overfull_ = 0;
};

}  // namespace wcol

#endif
