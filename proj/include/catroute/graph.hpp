#ifndef CATROUTE_GRAPH_HPP
#define CATROUTE_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catroute {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Undirected simple graph over dense vertex ids 0..n-1.
 *
 * Adjacency lists are kept sorted and symmetric; self-loops are rejected at
 * construction and parallel edges collapse. Immutable once built, so a Graph
 * may be shared freely between threads.
 */
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws ValidationError on a self-loop or an endpoint >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Optional display names, one per vertex when present.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Vertex v) const;

  /// Throws ArgumentError unless v < size().
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Reads "u v" lines; '#' comments; optional leading "n <count>" header.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Canonical form: "n <count>" header then sorted "u v" lines with u < v.
std::string to_edge_list(const Graph& g);

/// Hop distance from s to every vertex; nullopt where unreachable.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex s);

bool is_connected(const Graph& g);

/// Largest hop distance from v. Throws DisconnectedError when some vertex is unreachable.
std::size_t eccentricity(const Graph& g, Vertex v);

/// All-sources BFS. Throws ArgumentError for n = 0, DisconnectedError when disconnected.
std::size_t diameter(const Graph& g);

bool is_tree(const Graph& g);

/// Connected, n >= 2, exactly two degree-1 vertices and the rest degree 2.
bool is_path(const Graph& g);

enum class RootConstraint { None, MaxDegree2 };

/// Minimum-eccentricity vertex satisfying the constraint, ties to the smallest id.
Vertex choose_root(const Graph& g, RootConstraint constraint = RootConstraint::None);

}  // namespace catroute

#endif  // CATROUTE_GRAPH_HPP
