#ifndef SPTI_GRAPH_HPP
#define SPTI_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spti {

/// Raised for malformed graphs, malformed edge-list text, and for structural
/// queries that need a connected graph.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted so that two graphs built
/// from the same edge set in different orders compare equal and serialize
/// identically.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, duplicate edges or out-of-range endpoints.
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return matrix_[u * order_ + v] != 0; }
  int max_degree() const noexcept;

  bool is_connected() const;
  /// Every vertex degree is at most 4 (carbon valence).
  bool is_chemical() const noexcept { return max_degree() <= 4; }
  bool is_tree() const { return size() == order_ - 1 && is_connected(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Parses the "n m" header followed by m lines "u v". Lines whose first
/// non-blank character is '#' and blank lines are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Per-vertex sum of shortest-path distances, by BFS from every vertex.
std::vector<long long> distasums(const Graph& g);
/// m - n + 1; requires a connected graph.
int cyclomatic_number(const Graph& g);
/// Exact number of 3-cycles.
long long triangle_count(const Graph& g);
/// Vertex degrees sorted non-increasing.
std::vector<int> degree_sequence(const Graph& g);
/// "3-2-2-2-1" style rendering of a degree sequence.
std::string degree_string(const Graph& g);

/// Graph with vertex v renamed to perm[v].
Graph relabeled(const Graph& g, std::span<const int> perm);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace spti

#endif  // SPTI_GRAPH_HPP
