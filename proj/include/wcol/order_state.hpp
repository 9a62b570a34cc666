#ifndef WCOL_ORDER_STATE_HPP
#define WCOL_ORDER_STATE_HPP

#include <unordered_set>
#include <vector>

#include "wcol/graph.hpp"

namespace wcol {

/// Mutable subordering L_S together with maintained weakly r-reachable sets
/// under the subordering extension: u belongs to wreach(v) iff u == v, or u
/// is placed and there is a path of length <= r between u and v on which
/// every placed vertex lies at or right of u. Free vertices on such paths
/// are unconstrained, so wreach sets restricted to placed vertices can only
/// grow under right extensions.
///
/// Each vertex is placed (holds a slot in the order), free, or excluded.
/// Excluded vertices are invisible: no search traverses them and their sets
/// stay {v}. They exist so a WCOL-Merge instance can carve S2 out of the
/// graph while keeping exact sets over G[S1 u T u {placed}].
///
/// Single-writer; never share mutably.
class OrderState {
public:
  static constexpr int kFree = -1;
  static constexpr int kExcluded = -2;

  /// Empty subordering; every wreach set starts as {v}. Requires radius >= 1
  /// and bound >= 1.
  OrderState(const Graph& g, int radius, int bound);

  const Graph& graph() const { return *g_; }
  int radius() const { return radius_; }
  int bound() const { return bound_; }

  int placed_count() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int position(int v) const { return pos_[v]; }
  bool is_placed(int v) const { return pos_[v] >= 0; }
  bool is_free(int v) const { return pos_[v] == kFree; }
  bool is_excluded(int v) const { return pos_[v] == kExcluded; }
  std::vector<int> free_vertices() const;  // ascending index

  const std::unordered_set<int>& wreach(int v) const { return wreach_[v]; }
  const std::unordered_set<int>& wreach_inv(int v) const { return wreach_inv_[v]; }
  int wreach_size(int v) const { return static_cast<int>(wreach_[v].size()); }

  /// Number of vertices v with |wreach(v)| > bound.
  int overfull_count() const { return overfull_; }
  bool is_extendable() const { return overfull_ == 0; }
  std::vector<int> overfull_vertices() const;  // ascending index
  int max_wreach_size() const;

  /// Appends v at the right end. Only free vertices gain v in their sets, so
  /// this runs a depth-<=r BFS over the separately stored G[T] edges.
  void place_back(int v);

  /// Removes a placed vertex; the state afterwards equals one rebuilt from
  /// scratch by placing the remaining sequence.
  void remove_at(int v);

  void insert_before(int v, int anchor);
  void insert_after(int v, int anchor);
  /// Places free v so it occupies order()[slot], 0 <= slot <= placed_count().
  void insert_at_slot(int v, int slot);

  /// Free -> excluded. Witness paths through v die with it.
  void exclude(int v);
  /// Excluded -> placed at slot, computing v's sets from scratch.
  void place_from_excluded(int v, int slot);
  /// Placed -> excluded; exact inverse of place_from_excluded.
  void remove_to_excluded(int v);

  /// Drops every placement and exclusion; all vertices become free.
  void reset();
  /// reset() followed by place_back over the given sequence.
  void rebuild(const std::vector<int>& order);

  bool operator==(const OrderState& other) const;

private:
  std::vector<int> collect_inset(int v) const;
  std::vector<int> collect_free_ball(int v) const;
  std::vector<int> compute_out_set(int v) const;
  void refresh_inset(int u);
  void add_pair(int holder, int member);
  void remove_pair(int holder, int member);
  void set_size_changed(int v, int old_size);
  void strip_free_edges(int v);
  void restore_free_edges(int v);
  void renumber_from(int slot);

  const Graph* g_;
  int radius_;
  int bound_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<std::unordered_set<int>> wreach_;
  std::vector<std::unordered_set<int>> wreach_inv_;
  std::vector<std::unordered_set<int>> free_adj_;  // edges of G[T]
  int overfull_ = 0;
};

/// Exact wcol_r(G, L) of a full ordering with an argmax vertex, recomputed
/// from scratch with one order-respecting BFS per source. Independent of the
/// incremental bookkeeping above; used as the certifier.
struct FullOrderingEval {
  int wcol = 0;
  int witness = -1;
};
FullOrderingEval evaluate_full_ordering(const Graph& g, int radius,
                                        const std::vector<int>& order);

/// Direct (non-incremental) computation of every vertex's wreach set under a
/// subordering, free vertices unconstrained. positions[v] is the slot of v or
/// a negative value when v is free. Vertices left out entirely (excluded) are
/// marked by in_graph.
std::vector<std::unordered_set<int>> subordering_wreach_sets(
    const Graph& g, int radius, const std::vector<int>& order,
    const std::vector<char>* in_graph = nullptr);

}  // namespace wcol

#endif
