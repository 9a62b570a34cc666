#ifndef WCOL_GRAPH_HPP
#define WCOL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wcol {

/// Undirected, loop-free graph with dense internal indices 0..n-1 and a
/// bijective map to the original (integer) vertex labels. Immutable after
/// construction; safe to share across threads.
class Graph {
public:
  Graph() = default;

  /// Builds a graph on n vertices with labels 1..n. Duplicate edges are
  /// deduplicated, self-loops rejected.
  static Graph make(int n, const std::vector<std::pair<int, int>>& edges);

  /// As make(), but with explicit labels (labels.size() == n, all distinct).
  static Graph make_labeled(std::vector<std::int64_t> labels,
                            const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  std::int64_t label(int v) const { return labels_[v]; }
  std::optional<int> index_of_label(std::int64_t label) const;

  /// All edges as internal index pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;

private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::int64_t> labels_;
  std::unordered_map<std::int64_t, int> label_index_;
};

/// Parse failure; line is 1-based within the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Parses a whitespace-separated edge list. Lines starting with '#', 'c' or
/// '%' are comments. An optional leading header `p <n> <m>` fixes the vertex
/// set to labels 1..n (vertices mentioned nowhere else stay isolated);
/// without a header, labels are arbitrary integers, indexed in first-seen
/// order. Duplicate edges are deduplicated; self-loops are errors.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph: emits a `p n m` header when the labels are exactly
/// 1..n, otherwise a headerless list; edge lines sorted by label pair.
std::string serialize_graph(const Graph& g);

struct DegeneracyResult {
  int value = 0;
  std::vector<int> removal_order;  // internal indices, in removal sequence
};

/// Iteratively removes a minimum-degree vertex (ties: lowest index). value is
/// the largest residual degree seen at a removal.
DegeneracyResult degeneracy(const Graph& g);

/// All-pairs hop distances; unreachable pairs carry sentinel() which is
/// strictly greater than any finite distance.
class DistanceTable {
public:
  DistanceTable() = default;
  explicit DistanceTable(int n) : n_(n), d_(static_cast<size_t>(n) * n, n) {}

  int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  void set(int u, int v, int dist) { d_[static_cast<size_t>(u) * n_ + v] = dist; }
  int sentinel() const { return n_; }
  int size() const { return n_; }

private:
  int n_ = 0;
  std::vector<int> d_;
};

/// One BFS per source; exact on unweighted graphs.
DistanceTable all_pairs_distances(const Graph& g);

/// Largest pairwise distance inside G[s]; nullopt if G[s] is disconnected.
/// s must be nonempty and duplicate-free.
std::optional<int> induced_diameter(const Graph& g, std::span<const int> s);

}  // namespace wcol

#endif
