#include "wcol/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wcol/order_state.hpp"

namespace wcol {

namespace {

struct BnbSearch {
  OrderState st;
  int n;
  int best;
  std::vector<int> best_order;

  explicit BnbSearch(const Graph& g, int radius)
      : st(g, radius, std::max(g.vertex_count(), 1)), n(g.vertex_count()) {}

  void dfs() {
    int lb = st.max_wreach_size();
    if (lb >= best) return;
    if (st.placed_count() == n) {
      best = lb;
      best_order = st.order();
      return;
    }
    for (int v = 0; v < n; v++) {
      if (!st.is_free(v)) continue;
      st.place_back(v);
      dfs();
      st.remove_at(v);
    }
  }
};

}  // namespace

ExactWcolResult exact_wcol(const Graph& g, int radius, int limit) {
  const int n = g.vertex_count();
  if (n > limit)
    throw std::invalid_argument("exact_wcol: graph exceeds the size limit");
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (n == 0) return {0, identity};

  BnbSearch search(g, radius);
  search.best = evaluate_full_ordering(g, radius, identity).wcol;
  search.best_order = identity;
  search.dfs();
  return {search.best, search.best_order};
}

ExactWcolResult exact_wcol_bruteforce(const Graph& g, int radius, int limit) {
  const int n = g.vertex_count();
  if (n > limit)
    throw std::invalid_argument("exact_wcol_bruteforce: graph exceeds the size limit");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n == 0) return {0, perm};

  ExactWcolResult res{n + 1, {}};
  do {
    int w = evaluate_full_ordering(g, radius, perm).wcol;
    if (w < res.wcol) {
      res.wcol = w;
      res.order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

}  // namespace wcol
