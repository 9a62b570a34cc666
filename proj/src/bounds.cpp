#include "wcol/bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace wcol {

namespace {

struct MmdPlusRun {
  const Graph& g;
  int diameter_cap;
  std::vector<std::unordered_set<int>> adj;  // minor adjacency over reps
  std::vector<std::vector<int>> part;        // model sets per rep
  std::vector<char> alive;
  std::set<std::pair<int, int>> by_degree;   // (degree, rep)

  explicit MmdPlusRun(const Graph& graph, int r)
      : g(graph), diameter_cap((r - 1) / 2) {
    const int n = g.vertex_count();
    adj.resize(n);
    part.resize(n);
    alive.assign(n, 1);
    for (int v = 0; v < n; v++) {
      part[v] = {v};
      for (int w : g.neighbors(v)) adj[v].insert(w);
      by_degree.insert({g.degree(v), v});
    }
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  bool contractable(int v, int w) const {
    std::vector<int> merged = part[v];
    merged.insert(merged.end(), part[w].begin(), part[w].end());
    auto diam = induced_diameter(g, merged);
    return diam.has_value() && *diam <= diameter_cap;
  }

  void touch(int v) { by_degree.erase({degree(v), v}); }
  void untouch(int v) { by_degree.insert({degree(v), v}); }

  void contract(int v, int w) {
    touch(v);
    touch(w);
    alive[w] = 0;
    adj[v].erase(w);
    for (int x : adj[w]) {
      if (x == v) continue;
      touch(x);
      adj[x].erase(w);
      adj[x].insert(v);
      adj[v].insert(x);
      untouch(x);
    }
    adj[w].clear();
    part[v].insert(part[v].end(), part[w].begin(), part[w].end());
    part[w].clear();
    untouch(v);
  }

  void erase(int v) {
    touch(v);
    alive[v] = 0;
    for (int x : adj[v]) {
      touch(x);
      adj[x].erase(v);
      untouch(x);
    }
    adj[v].clear();
  }

  MinorModel snapshot() const {
    MinorModel model;
    std::vector<int> index(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); v++) {
      if (!alive[v]) continue;
      index[v] = static_cast<int>(model.parts.size());
      model.parts.push_back(part[v]);
    }
    for (int v = 0; v < g.vertex_count(); v++) {
      if (!alive[v]) continue;
      for (int w : adj[v])
        if (v < w) model.minor_edges.push_back({index[v], index[w]});
    }
    return model;
  }
};

}  // namespace

MmdPlusResult wcol_mmd_plus_detailed(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("wcol_mmd_plus: radius must be >= 1");
  MmdPlusResult res;
  if (g.vertex_count() == 0) return res;

  MmdPlusRun run(g, r);
  res.bound = 1;
  res.witness = run.snapshot();
  while (!run.by_degree.empty()) {
    auto [deg, v] = *run.by_degree.begin();
    if (deg + 1 > res.bound) {
      res.bound = deg + 1;
      res.witness = run.snapshot();
    }
    // minimum-degree neighbor whose merged blob keeps small diameter
    int pick = -1;
    for (int w : run.adj[v]) {
      if (!run.contractable(v, w)) continue;
      if (pick < 0 || run.degree(w) < run.degree(pick) ||
          (run.degree(w) == run.degree(pick) && w < pick))
        pick = w;
    }
    std::ostringstream line;
    if (pick >= 0) {
      line << "contract " << g.label(v) << " " << g.label(pick)
           << " (deg " << deg << ")";
      run.contract(v, pick);
    } else {
      line << "delete " << g.label(v) << " (deg " << deg << ")";
      run.erase(v);
    }
    res.trace.push_back(line.str());
  }
  return res;
}

int wcol_mmd_plus(const Graph& g, int r) {
  return wcol_mmd_plus_detailed(g, r).bound;
}

}  // namespace wcol
