#ifndef WCOL_TESTUTIL_HPP
#define WCOL_TESTUTIL_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "wcol/graph.hpp"
#include "wcol/order_state.hpp"

namespace wcol::test {

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; i++) e.push_back({i, i + 1});
  return Graph::make(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; i++) e.push_back({i, (i + 1) % n});
  return Graph::make(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) e.push_back({i, j});
  return Graph::make(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; i++) e.push_back({0, i});
  return Graph::make(leaves + 1, e);
}

inline Graph grid_graph(int rows, int cols) {
  std::vector<std::pair<int, int>> e;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) {
      if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
    }
  return Graph::make(rows * cols, e);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> e;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (coin(rng)) e.push_back({i, j});
  return Graph::make(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; i++) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    e.push_back({parent(rng), i});
  }
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (coin(rng)) e.push_back({i, j});
  return Graph::make(n, e);
}

/// Calls fn for every labeled graph on exactly n vertices.
inline void for_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) pairs.push_back({i, j});
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); mask++) {
    std::vector<std::pair<int, int>> e;
    for (size_t b = 0; b < pairs.size(); b++)
      if (mask >> b & 1) e.push_back(pairs[b]);
    fn(Graph::make(n, e));
  }
}

/// wreach sets of a subordering by explicit enumeration of all simple paths
/// of length <= radius: u lands in wreach(v) iff some path between them has
/// every placed vertex at or right of u. Exponential; tiny graphs only.
inline std::vector<std::set<int>> naive_wreach_sets(
    const Graph& g, int radius, const std::vector<int>& order,
    const std::vector<char>* in_graph = nullptr) {
  const int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < order.size(); i++) pos[order[i]] = static_cast<int>(i);
  auto present = [&](int v) { return in_graph == nullptr || (*in_graph)[v]; };

  std::vector<std::set<int>> sets(n);
  for (int v = 0; v < n; v++)
    if (present(v)) sets[v].insert(v);

  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::function<void(int, int)> walk = [&](int v, int u) {
    // path currently runs v .. u
    if (pos[u] >= 0) {
      bool leftmost = true;
      for (int w : path)
        if (pos[w] >= 0 && pos[w] < pos[u]) leftmost = false;
      if (leftmost) sets[v].insert(u);
    }
    if (static_cast<int>(path.size()) > radius) return;
    for (int w : g.neighbors(u)) {
      if (on_path[w] || !present(w)) continue;
      on_path[w] = 1;
      path.push_back(w);
      walk(v, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int v = 0; v < n; v++) {
    if (!present(v)) continue;
    on_path[v] = 1;
    path.assign(1, v);
    walk(v, v);
    on_path[v] = 0;
  }
  return sets;
}

inline std::set<int> as_set(const std::unordered_set<int>& s) {
  return {s.begin(), s.end()};
}

inline OrderState make_state(const Graph& g, int radius, int bound,
                             const std::vector<int>& order) {
  OrderState st(g, radius, bound);
  for (int v : order) st.place_back(v);
  return st;
}

}  // namespace wcol::test

#endif
