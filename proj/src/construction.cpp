#include "catroute/construction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "catroute/errors.hpp"

namespace catroute {

namespace {

enum class SetKind { Subtree, Left, Right };

// Vertices of the subtree under v in breadth-first order, so depth never decreases.
std::vector<Vertex> subtree_bfs(const RootedTree& t, Vertex v) {
  std::vector<Vertex> out{v};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex c : t.children(out[head])) out.push_back(c);
  }
  return out;
}

// Calls emit(owner, kind, index, members) for S_v and every L_{v,i}, R_{v,i}.
template <typename Emit>
void for_each_binary_set(const RootedBinaryTree& bt, Emit&& emit) {
  const auto& t = bt.tree();
  const auto n = t.size();
  for (Vertex v = 0; v < n; ++v) {
    VertexSet subtree(n);
    for (Vertex x : subtree_bfs(t, v)) subtree.set(x);
    emit(v, SetKind::Subtree, t.depth(v), subtree);

    auto helper = [&](std::optional<Vertex> grow, std::optional<Vertex> keep, SetKind kind) {
      if (!grow) return;
      VertexSet members(n);
      members.set(v);
      if (keep) {
        for (Vertex x : subtree_bfs(t, *keep)) members.set(x);
      }
      auto layered = subtree_bfs(t, *grow);
      std::size_t next = 0;
      const auto first = t.depth(v);
      const auto last = t.depth(v) + t.height(*grow);
      for (std::size_t i = first; i <= last; ++i) {
        while (next < layered.size() && t.depth(layered[next]) <= i) members.set(layered[next++]);
        emit(v, kind, i, members);
      }
    };
    helper(bt.left(v), bt.right(v), SetKind::Left);
    helper(bt.right(v), bt.left(v), SetKind::Right);
  }
}

}  // namespace

CategorySystem path_categories(const Graph& g) {
  if (!is_path(g)) throw ValidationError("path_categories requires a path graph");
  const auto n = g.size();
  Vertex start = 0;
  while (g.degree(start) != 1) ++start;  // smallest-id endpoint
  std::vector<Vertex> order{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (order.size() < n) {
    for (Vertex w : g.neighbors(order.back())) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
        break;
      }
    }
  }
  std::vector<VertexSet> sets;
  sets.reserve(2 * n);
  VertexSet prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (prefix.any()) sets.push_back(prefix);  // A_i
    prefix.set(order[i]);
  }
  VertexSet suffix(n);
  for (std::size_t i = n; i-- > 0;) {
    if (suffix.any()) sets.push_back(suffix);  // B_i
    suffix.set(order[i]);
  }
  return CategorySystem(n, std::move(sets));
}

CategorySystem binary_tree_categories(const RootedBinaryTree& t) {
  std::vector<VertexSet> sets;
  for_each_binary_set(t, [&](Vertex, SetKind, std::size_t, const VertexSet& members) {
    sets.push_back(members);
  });
  return CategorySystem(t.size(), std::move(sets));
}

EmbeddingMap embed_into_binary(const RootedTree& t) {
  const auto n = t.size();
  std::vector<std::size_t> weight(n, 1);
  auto order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (auto p = t.parent(*it)) weight[*p] += weight[*it];
  }

  std::vector<Edge> edges;
  std::vector<std::optional<Vertex>> left(n), right(n), owner(n);
  Vertex next_id = n;

  auto attach = [&](Vertex parent, Vertex child, bool as_left) {
    (as_left ? left : right)[parent] = child;
    edges.emplace_back(parent, child);
  };

  // Index where the prefix weight is closest to half; earliest on ties.
  auto split_point = [&](std::span<const Vertex> kids) {
    std::size_t total = 0;
    for (Vertex c : kids) total += weight[c];
    std::size_t best = 1, prefix = 0;
    std::size_t best_gap = std::numeric_limits<std::size_t>::max();
    for (std::size_t p = 1; p < kids.size(); ++p) {
      prefix += weight[kids[p - 1]];
      std::size_t rest = total - prefix;
      std::size_t gap = prefix > rest ? prefix - rest : rest - prefix;
      if (gap < best_gap) {
        best_gap = gap;
        best = p;
      }
    }
    return best;
  };

  // Hangs kids (size >= 1) below parent's left or right slot.
  auto build = [&](auto&& self, Vertex parent, bool as_left, Vertex owner_vertex,
                   std::span<const Vertex> kids) -> void {
    if (kids.size() == 1) {
      attach(parent, kids[0], as_left);
      return;
    }
    Vertex dummy = next_id++;
    left.emplace_back();
    right.emplace_back();
    owner.push_back(owner_vertex);
    attach(parent, dummy, as_left);
    auto p = split_point(kids);
    self(self, dummy, true, owner_vertex, kids.first(p));
    self(self, dummy, false, owner_vertex, kids.subspan(p));
  };

  for (Vertex v = 0; v < n; ++v) {
    auto kids = t.children(v);
    if (kids.size() <= 2) {
      if (kids.size() >= 1) attach(v, kids[0], true);
      if (kids.size() == 2) attach(v, kids[1], false);
      continue;
    }
    auto p = split_point(kids);
    build(build, v, true, v, kids.first(p));
    build(build, v, false, v, kids.subspan(p));
  }

  const auto total = static_cast<std::size_t>(next_id);
  std::vector<std::optional<Vertex>> origin(total);
  for (Vertex v = 0; v < n; ++v) origin[v] = v;
  std::vector<Vertex> to_embedded(n);
  std::iota(to_embedded.begin(), to_embedded.end(), Vertex{0});

  RootedTree expanded(Graph(total, edges), t.root());
  return EmbeddingMap{
      .original = t,
      .embedded = RootedBinaryTree(std::move(expanded), std::move(left), std::move(right),
                                   std::move(origin)),
      .original_to_embedded = std::move(to_embedded),
      .dummy_owner = std::move(owner),
  };
}

CategorySystem tree_categories(const RootedTree& t, DummyPolicy policy) {
  const auto n = t.size();
  if (n == 0) throw ArgumentError("tree_categories needs at least one vertex");
  auto emb = embed_into_binary(t);
  const auto& bt = emb.embedded;

  std::vector<VertexSet> sets;
  // (owner, depth of dummy, side, index) -> merged set
  std::map<std::tuple<Vertex, std::size_t, SetKind, std::size_t>, VertexSet> merged;

  for_each_binary_set(bt, [&](Vertex x, SetKind kind, std::size_t index, const VertexSet& members) {
    VertexSet image = members;
    image.resize(n);  // original vertices keep ids 0..n-1; dummies are dropped
    if (policy == DummyPolicy::Drop || !bt.is_dummy(x)) {
      if (image.any()) sets.push_back(std::move(image));
      return;
    }
    // A dummy's subtree set is never needed: the subtree set of the first
    // original vertex below it already separates ancestors from descendants.
    if (kind == SetKind::Subtree) return;
    // Helper sets of u's dummies at one depth come from disjoint subtrees, each
    // hanging off u, so their union plus u stays connected and still excludes
    // the vertex being separated.
    Vertex u = *emb.dummy_owner[x];
    auto [it, fresh] = merged.try_emplace({u, bt.tree().depth(x), kind, index}, n);
    it->second |= image;
    it->second.set(u);
  });
  for (auto& [key, set] : merged) sets.push_back(std::move(set));
  return CategorySystem(n, std::move(sets));
}

CategorySystem graph_categories(const Graph& g) {
  return tree_categories(bfs_spanning_tree(g, choose_root(g, RootConstraint::None)));
}

std::pair<Graph, Graph> impossibility_fixture() {
  constexpr Vertex s = 0, u = 1, t = 2;
  const std::vector<Edge> first{{s, u}, {u, t}};
  const std::vector<Edge> second{{u, s}, {s, t}};
  Graph g1(3, first), g2(3, second);
  g1.set_labels({"s", "u", "t"});
  g2.set_labels({"s", "u", "t"});
  return {std::move(g1), std::move(g2)};
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "auto") return Method::Auto;
  if (name == "path") return Method::Path;
  if (name == "binary-tree") return Method::BinaryTree;
  if (name == "tree") return Method::Tree;
  if (name == "graph") return Method::Graph;
  return std::nullopt;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Path: return "path";
    case Method::BinaryTree: return "binary-tree";
    case Method::Tree: return "tree";
    case Method::Graph: return "graph";
  }
  return "unknown";
}

Method resolve_method(const Graph& g, Method requested) {
  if (requested != Method::Auto) return requested;
  if (is_path(g)) return Method::Path;
  if (is_tree(g)) return Method::Tree;
  return Method::Graph;
}

CategorySystem construct_categories(const Graph& g, Method method) {
  switch (resolve_method(g, method)) {
    case Method::Path:
      return path_categories(g);
    case Method::BinaryTree:
      return binary_tree_categories(
          RootedBinaryTree(RootedTree(g, choose_root(g, RootConstraint::MaxDegree2))));
    case Method::Tree:
      return tree_categories(RootedTree(g, choose_root(g, RootConstraint::None)));
    case Method::Graph:
    case Method::Auto:
      break;
  }
  return graph_categories(g);
}

}  // namespace catroute
