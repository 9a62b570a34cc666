#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "wcol/order_state.hpp"
#include "wcol/turbo_rl.hpp"

using namespace wcol;
using namespace wcol::test;

TEST_CASE("potsreach basics") {
  Graph iso = Graph::make(1, {});
  RLState st(iso, 2, 1);
  st.prepend(0);
  CHECK(as_set(st.potsreach(0)) == std::set<int>{0});

  // edge {0,1}, S = {1}, T = {0}, r = 1: potsreach(1) = {0, 1}
  Graph e = Graph::make(2, {{0, 1}});
  RLState ste(e, 1, 2);
  ste.prepend(1);
  CHECK(as_set(ste.potsreach(1)) == std::set<int>{0, 1});
  CHECK_THROWS_AS(ste.potsreach(0), std::invalid_argument);
}

TEST_CASE("extendability") {
  Graph k3 = complete_graph(3);
  RLState st(k3, 1, 1);
  CHECK(st.is_extendable());  // empty
  st.prepend(0);
  CHECK(st.potsreach_size(0) == 3);
  CHECK_FALSE(st.is_extendable());

  Graph edgeless = Graph::make(4, {});
  RLState ste(edgeless, 2, 1);
  for (int v = 0; v < 4; v++) ste.prepend(v);
  CHECK(ste.is_extendable());
}

TEST_CASE("potsreach equals wreach once everything is placed") {
  std::mt19937_64 rng(89);
  for (int it = 0; it < 40; it++) {
    int n = 1 + static_cast<int>(rng() % 12);
    int r = 1 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n, 0.3);
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    RLState st(g, r, n);
    // prepend in reverse so the final left-to-right order is perm
    for (int i = n - 1; i >= 0; i--) st.prepend(perm[i]);
    CHECK(st.order_left_to_right() == perm);

    auto sets = subordering_wreach_sets(g, r, perm);
    for (int v = 0; v < n; v++) CHECK(as_set(st.potsreach(v)) == as_set(sets[v]));
  }
}

TEST_CASE("monotonicity under prepends and exact undo") {
  std::mt19937_64 rng(97);
  for (int it = 0; it < 40; it++) {
    int n = 2 + static_cast<int>(rng() % 11);
    int r = 1 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n, 0.35);
    RLState st(g, r, n);
    std::vector<RLState> snapshots;
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::set<int>> before(n);
    for (int v : perm) {
      snapshots.push_back(st);
      for (int u = 0; u < n; u++)
        before[u] = st.is_placed(u) ? as_set(st.potsreach(u)) : std::set<int>{};
      st.prepend(v);
      for (int u = 0; u < n; u++) {
        if (!st.is_placed(u) || u == v) continue;
        for (int w : before[u]) CHECK(st.potsreach(u).count(w) == 1);
      }
    }
    while (st.placed_count() > 0) {
      st.unprepend();
      REQUIRE(st == snapshots[st.placed_count()]);
    }
  }
}

namespace {

// potsreach per its definition, from scratch: wreach inside the placed
// subgraph, plus free endpoints of paths whose interior is placed
std::set<int> naive_potsreach(const Graph& g, int radius,
                              const std::vector<int>& placed_order, int v) {
  const int n = g.vertex_count();
  std::vector<char> placed(n, 0);
  for (int u : placed_order) placed[u] = 1;
  std::vector<char> in_sub(n, 0);
  for (int u : placed_order) in_sub[u] = 1;

  auto sets = wcol::test::naive_wreach_sets(g, radius, placed_order, &in_sub);
  std::set<int> result = sets[v];

  // paths v .. u with everything but the endpoint u placed
  std::vector<int> path{v};
  std::vector<char> on_path(n, 0);
  on_path[v] = 1;
  std::function<void(int)> walk = [&](int x) {
    if (static_cast<int>(path.size()) - 1 >= radius) return;
    for (int w : g.neighbors(x)) {
      if (on_path[w]) continue;
      if (!placed[w]) {
        result.insert(w);
        continue;
      }
      on_path[w] = 1;
      path.push_back(w);
      walk(w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  walk(v);
  return result;
}

}  // namespace

TEST_CASE("potsreach matches the from-scratch definition on partial states") {
  std::mt19937_64 rng(91);
  for (int it = 0; it < 60; it++) {
    int n = 2 + static_cast<int>(rng() % 8);
    int r = 1 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n, 0.35);
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    int placed = 1 + static_cast<int>(rng() % n);

    RLState st(g, r, n);
    // prepending perm[placed-1] .. perm[0] puts perm[0..placed) left to right
    for (int i = placed - 1; i >= 0; i--) st.prepend(perm[i]);
    std::vector<int> order(perm.begin(), perm.begin() + placed);

    for (int v : order)
      CHECK(as_set(st.potsreach(v)) == naive_potsreach(g, r, order, v));
  }
}

TEST_CASE("potsreach and its inverse index stay dual") {
  std::mt19937_64 rng(93);
  for (int it = 0; it < 25; it++) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 0.35);
    RLState st(g, 2, n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    int placed = static_cast<int>(rng() % (n + 1));
    for (int i = 0; i < placed; i++) st.prepend(perm[i]);

    for (int v = 0; v < n; v++) {
      if (!st.is_placed(v)) continue;
      for (int u = 0; u < n; u++)
        CHECK((st.potsreach(v).count(u) == 1) ==
              (st.potsreach_inv(u).count(v) == 1));
    }
  }
}

TEST_CASE("turbocharge_rl: swapping out the leftmost vertex") {
  // edge {0,1} plus isolated 2; r = 1, k = 1: any endpoint prepended is
  // overfull, the isolated vertex is fine
  Graph g = Graph::make(3, {{0, 1}});
  DistanceTable dist = all_pairs_distances(g);
  RLState st(g, 1, 1);
  st.prepend(0);
  REQUIRE_FALSE(st.is_extendable());
  RunStats stats;
  CHECK(turbocharge_rl(st, 1, dist, no_deadline(), stats) == TcOutcome::success);
  CHECK(st.is_extendable());
  CHECK(st.order_left_to_right() == std::vector<int>{2});
}

TEST_CASE("turbocharge_rl failure and timeout restore the state") {
  Graph g = complete_graph(3);
  DistanceTable dist = all_pairs_distances(g);
  RLState st(g, 1, 1);
  st.prepend(1);
  REQUIRE_FALSE(st.is_extendable());
  RLState snapshot = st;
  RunStats stats;
  CHECK(turbocharge_rl(st, 1, dist, no_deadline(), stats) == TcOutcome::failure);
  CHECK(st == snapshot);
  Deadline past = Clock::now() - std::chrono::seconds(1);
  CHECK(turbocharge_rl(st, 1, dist, past, stats) == TcOutcome::timeout);
  CHECK(st == snapshot);
  CHECK_THROWS_AS(turbocharge_rl(st, 0, dist, no_deadline(), stats),
                  std::invalid_argument);
}

TEST_CASE("turbocharge_rl succeeds whenever some block refill works") {
  std::mt19937_64 rng(101);
  int successes = 0;
  for (int it = 0; it < 120; it++) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n, 0.4);
    int bound = 1 + static_cast<int>(rng() % 3);
    RLState st(g, 2, bound);
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int v : perm) {
      st.prepend(v);
      if (!st.is_extendable()) break;
    }
    if (st.is_extendable()) continue;
    RLState snapshot = st;
    int before = st.placed_count();
    DistanceTable dist = all_pairs_distances(g);
    RunStats stats;
    TcOutcome out =
        turbocharge_rl(st, 1 + static_cast<int>(rng() % 3), dist, no_deadline(), stats);
    if (out == TcOutcome::success) {
      successes++;
      CHECK(st.is_extendable());
      CHECK(st.placed_count() == before);
    } else {
      CHECK(st == snapshot);
    }
  }
  CHECK(successes > 5);
}
