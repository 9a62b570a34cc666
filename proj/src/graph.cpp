#include "wcol/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

namespace wcol {

namespace {

std::vector<std::pair<int, int>> dedup_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("vertex index out of range");
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::int64_t> labels(n);
  for (int i = 0; i < n; i++) labels[i] = i + 1;
  return make_labeled(std::move(labels), edges);
}

Graph Graph::make_labeled(std::vector<std::int64_t> labels,
                          const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n_ = static_cast<int>(labels.size());
  g.labels_ = std::move(labels);
  for (int i = 0; i < g.n_; i++) {
    if (!g.label_index_.emplace(g.labels_[i], i).second)
      throw std::invalid_argument("duplicate vertex label");
  }
  auto unique_edges = dedup_edges(g.n_, edges);
  g.adj_.assign(g.n_, {});
  for (auto [u, v] : unique_edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.m_ = static_cast<long long>(unique_edges.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::index_of_label(std::int64_t label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; u++)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

bool parse_int64(std::string_view tok, std::int64_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) i++;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) j++;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  std::int64_t header_n = 0;
  bool seen_edge_line = false;

  std::vector<std::pair<std::int64_t, std::int64_t>> label_edges;
  std::vector<std::int64_t> seen_order;
  std::unordered_map<std::int64_t, int> seen;

  auto intern = [&](std::int64_t label) {
    auto it = seen.find(label);
    if (it != seen.end()) return it->second;
    int idx = static_cast<int>(seen_order.size());
    seen.emplace(label, idx);
    seen_order.push_back(label);
    return idx;
  };

  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    lineno++;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    char c0 = toks[0][0];
    if (c0 == '#' || c0 == 'c' || c0 == '%') continue;

    if (toks[0] == "p") {
      if (have_header || seen_edge_line)
        throw ParseError(lineno, "unexpected header line");
      std::int64_t m = 0;
      if (toks.size() != 3 || !parse_int64(toks[1], header_n) ||
          !parse_int64(toks[2], m) || header_n < 0 || m < 0)
        throw ParseError(lineno, "malformed header, expected `p <n> <m>`");
      have_header = true;
      continue;
    }

    if (toks.size() != 2)
      throw ParseError(lineno, "expected an edge `u v`");
    std::int64_t u, v;
    if (!parse_int64(toks[0], u) || !parse_int64(toks[1], v))
      throw ParseError(lineno, "non-integer vertex token");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (have_header && (u < 1 || u > header_n || v < 1 || v > header_n))
      throw ParseError(lineno, "vertex label outside 1..n declared by header");
    seen_edge_line = true;
    label_edges.emplace_back(u, v);
  }

  std::vector<std::int64_t> labels;
  std::vector<std::pair<int, int>> edges;
  if (have_header) {
    labels.resize(static_cast<size_t>(header_n));
    for (std::int64_t i = 0; i < header_n; i++) labels[i] = i + 1;
    for (auto [u, v] : label_edges)
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  } else {
    for (auto [u, v] : label_edges) {
      int a = intern(u);
      int b = intern(v);
      edges.emplace_back(a, b);
    }
    labels = seen_order;
  }
  return Graph::make_labeled(std::move(labels), edges);
}

std::string serialize_graph(const Graph& g) {
  bool canonical = true;
  for (int i = 0; i < g.vertex_count(); i++)
    if (g.label(i) != i + 1) canonical = false;

  std::vector<std::pair<std::int64_t, std::int64_t>> lines;
  for (auto [u, v] : g.edges()) {
    std::int64_t a = g.label(u), b = g.label(v);
    lines.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(lines.begin(), lines.end());

  std::ostringstream out;
  if (canonical)
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [a, b] : lines) out << a << " " << b << "\n";
  return out.str();
}

DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  DegeneracyResult res;
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; v++) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    res.value = std::max(res.value, d);
    res.removal_order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      deg[w]--;
      queue.insert({deg[w], w});
    }
  }
  return res;
}

DistanceTable all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceTable table(n);
  std::vector<int> dist(n);
  std::queue<int> bfs;
  for (int s = 0; s < n; s++) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      table.set(s, u, dist[u]);
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
      }
    }
  }
  return table;
}

std::optional<int> induced_diameter(const Graph& g, std::span<const int> s) {
  if (s.empty()) throw std::invalid_argument("induced_diameter: empty vertex set");
  std::vector<char> in_set(g.vertex_count(), 0);
  for (int v : s) in_set[v] = 1;

  std::vector<int> dist(g.vertex_count());
  std::queue<int> bfs;
  int diameter = 0;
  for (int src : s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    bfs.push(src);
    int reached = 0;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      reached++;
      diameter = std::max(diameter, dist[u]);
      for (int w : g.neighbors(u)) {
        if (in_set[w] && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
      }
    }
    if (reached != static_cast<int>(s.size())) return std::nullopt;
  }
  return diameter;
}

}  // namespace wcol
