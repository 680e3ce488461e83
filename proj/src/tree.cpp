#include "catroute/tree.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "catroute/errors.hpp"

namespace catroute {

RootedTree::RootedTree(Graph tree, Vertex root) : graph_(std::move(tree)), root_(root) {
  graph_.check_vertex(root_);
  if (!is_tree(graph_)) {
    throw ValidationError("graph with " + std::to_string(graph_.size()) + " vertices and " +
                          std::to_string(graph_.edge_count()) + " edges is not a tree");
  }
  const auto n = graph_.size();
  parent_.assign(n, std::nullopt);
  children_.assign(n, {});
  depth_.assign(n, 0);
  height_.assign(n, 0);
  enter_.assign(n, 0);
  exit_.assign(n, 0);

  order_.reserve(n);
  order_.push_back(root_);
  std::vector<bool> seen(n, false);
  seen[root_] = true;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    Vertex u = order_[head];
    for (Vertex v : graph_.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      parent_[v] = u;
      depth_[v] = depth_[u] + 1;
      children_[u].push_back(v);  // neighbours are sorted, so children are too
      order_.push_back(v);
    }
  }
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    if (auto p = parent_[*it]) height_[*p] = std::max(height_[*p], height_[*it] + 1);
  }

  // Iterative DFS for ancestor queries.
  std::size_t clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root_, 0}};
  enter_[root_] = clock++;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    if (next < children_[u].size()) {
      Vertex c = children_[u][next++];
      enter_[c] = clock++;
      stack.emplace_back(c, 0);
    } else {
      exit_[u] = clock++;
      stack.pop_back();
    }
  }
}

RootedBinaryTree::RootedBinaryTree(RootedTree tree)
    : tree_(std::move(tree)),
      left_(tree_.size()),
      right_(tree_.size()),
      origin_(tree_.size()) {
  for (Vertex v = 0; v < tree_.size(); ++v) {
    auto kids = tree_.children(v);
    if (kids.size() > 2) {
      throw ValidationError("vertex " + std::to_string(v) + " has " +
                            std::to_string(kids.size()) + " children; a binary tree allows 2");
    }
    if (kids.size() >= 1) left_[v] = kids[0];
    if (kids.size() == 2) right_[v] = kids[1];
    origin_[v] = v;
  }
}

RootedBinaryTree::RootedBinaryTree(RootedTree tree, std::vector<std::optional<Vertex>> left,
                                   std::vector<std::optional<Vertex>> right,
                                   std::vector<std::optional<Vertex>> origin)
    : tree_(std::move(tree)),
      left_(std::move(left)),
      right_(std::move(right)),
      origin_(std::move(origin)) {
  validate();
}

void RootedBinaryTree::validate() const {
  const auto n = tree_.size();
  if (left_.size() != n || right_.size() != n || origin_.size() != n) {
    throw ValidationError("left/right/origin arrays must have one entry per vertex");
  }
  std::vector<Vertex> seen_origins;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> slots;
    if (left_[v]) slots.push_back(*left_[v]);
    if (right_[v]) slots.push_back(*right_[v]);
    std::sort(slots.begin(), slots.end());
    auto kids = tree_.children(v);
    if (!std::equal(slots.begin(), slots.end(), kids.begin(), kids.end())) {
      throw ValidationError("left/right of vertex " + std::to_string(v) +
                            " do not match its children");
    }
    if (origin_[v]) seen_origins.push_back(*origin_[v]);
  }
  std::sort(seen_origins.begin(), seen_origins.end());
  if (std::adjacent_find(seen_origins.begin(), seen_origins.end()) != seen_origins.end()) {
    throw ValidationError("origin map is not injective");
  }
}

RootedTree bfs_spanning_tree(const Graph& g, Vertex root) {
  auto dist = bfs_distances(g, root);
  std::vector<Edge> edges;
  edges.reserve(g.size() ? g.size() - 1 : 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!dist[v]) throw DisconnectedError(root, v);
    if (v == root) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] && *dist[w] + 1 == *dist[v]) {
        edges.emplace_back(w, v);
        break;
      }
    }
  }
  return RootedTree(Graph(g.size(), edges), root);
}

}  // namespace catroute
