#ifndef CATROUTE_CONSTRUCTION_HPP
#define CATROUTE_CONSTRUCTION_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "catroute/categories.hpp"
#include "catroute/graph.hpp"
#include "catroute/tree.hpp"

namespace catroute {

/**
 * Prefix/suffix construction on a path graph.
 *
 * Numbering vertices 0..n-1 from the smaller-id endpoint, emits
 * A_i = {0..i-1} and B_i = {i+1..n-1} for every i, dropping empties. Every
 * vertex lands in exactly n-1 sets. Throws ValidationError if g is not a path.
 */
CategorySystem path_categories(const Graph& g);

/**
 * Subtree and left/right helper sets on a rooted binary tree.
 *
 * For each vertex v: S_v (its subtree); L_{v,i} = v + left-subtree vertices
 * with absolute depth <= i + the whole right subtree, for
 * depth(v) <= i <= depth(v) + height(left(v)); R_{v,i} symmetric. The result
 * is over the tree's own vertex ids, dummies included.
 */
CategorySystem binary_tree_categories(const RootedBinaryTree& t);

/// A rooted tree expanded into a binary tree whose extra vertices are dummies.
struct EmbeddingMap {
  RootedTree original;
  /// Ids 0..n-1 are the original vertices; dummies follow.
  RootedBinaryTree embedded;
  std::vector<Vertex> original_to_embedded;
  /// For each dummy, the original vertex whose children it groups. nullopt for non-dummies.
  std::vector<std::optional<Vertex>> dummy_owner;
};

/**
 * Replaces every child list of length >= 3 by a weight-balanced binary tree of
 * dummy vertices (weight = child subtree size), splitting the id-ordered list
 * where left and right weights differ least. Ancestry among original vertices
 * is unchanged.
 */
EmbeddingMap embed_into_binary(const RootedTree& t);

/// How sets built on the binary embedding are carried back to the original tree.
enum class DummyPolicy {
  /// Dummy-owned helper sets gain their owner and merge per (owner, depth, side, index).
  AttachOwner,
  /// Delete dummy ids and keep whatever remains. Can break routing (see tests).
  Drop,
};

CategorySystem tree_categories(const RootedTree& t, DummyPolicy policy = DummyPolicy::AttachOwner);

/// tree_categories of the BFS tree rooted at the minimum-eccentricity vertex.
CategorySystem graph_categories(const Graph& g);

/// G1 = path s-u-t and G2 = path u-s-t on ids s=0, u=1, t=2.
std::pair<Graph, Graph> impossibility_fixture();

enum class Method { Auto, Path, BinaryTree, Tree, Graph };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method m);

/// Most specific method that applies: path, then tree, then graph.
Method resolve_method(const Graph& g, Method requested);

/// Dispatches on the resolved method; trees are rooted by choose_root.
CategorySystem construct_categories(const Graph& g, Method method);

}  // namespace catroute

#endif  // CATROUTE_CONSTRUCTION_HPP
