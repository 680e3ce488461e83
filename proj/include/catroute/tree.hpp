#ifndef CATROUTE_TREE_HPP
#define CATROUTE_TREE_HPP

#include <optional>
#include <span>
#include <vector>

#include "catroute/graph.hpp"

namespace catroute {

/// A tree graph viewed from a root: parent, sorted children, depth and height per vertex.
class RootedTree {
 public:
  /// Throws ValidationError if `tree` is not a tree, ArgumentError if root is out of range.
  RootedTree(Graph tree, Vertex root);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }
  Vertex root() const noexcept { return root_; }

  std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  std::size_t depth(Vertex v) const { return depth_.at(v); }
  /// Longest downward path from v; 0 for leaves.
  std::size_t height(Vertex v) const { return height_.at(v); }
  std::size_t height() const { return height_[root_]; }

  /// True when a lies on the root path of d (a vertex is its own ancestor).
  bool is_ancestor(Vertex a, Vertex d) const {
    return enter_.at(a) <= enter_.at(d) && exit_.at(d) <= exit_.at(a);
  }

  /// Vertices in breadth-first order from the root.
  std::span<const Vertex> bfs_order() const noexcept { return order_; }

 private:
  Graph graph_;
  Vertex root_;
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> exit_;
  std::vector<Vertex> order_;
};

/**
 * Rooted tree with at most two children per vertex and explicit left/right slots.
 *
 * origin(v) names the vertex of some other tree that v stands for; it is
 * absent for dummy vertices introduced by an embedding.
 */
class RootedBinaryTree {
 public:
  /// First child (by id) goes left, second right. Throws ValidationError above two children.
  explicit RootedBinaryTree(RootedTree tree);

  RootedBinaryTree(RootedTree tree, std::vector<std::optional<Vertex>> left,
                   std::vector<std::optional<Vertex>> right,
                   std::vector<std::optional<Vertex>> origin);

  const RootedTree& tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return tree_.size(); }

  std::optional<Vertex> left(Vertex v) const { return left_.at(v); }
  std::optional<Vertex> right(Vertex v) const { return right_.at(v); }
  std::optional<Vertex> origin(Vertex v) const { return origin_.at(v); }
  bool is_dummy(Vertex v) const { return !origin_.at(v).has_value(); }

 private:
  void validate() const;

  RootedTree tree_;
  std::vector<std::optional<Vertex>> left_;
  std::vector<std::optional<Vertex>> right_;
  std::vector<std::optional<Vertex>> origin_;
};

/// BFS tree; each vertex's parent is its smallest-id neighbour one level closer to root.
RootedTree bfs_spanning_tree(const Graph& g, Vertex root);

}  // namespace catroute

#endif  // CATROUTE_TREE_HPP
