#include <doctest.h>

#include <cmath>

#include "catroute/checks.hpp"
#include "catroute/construction.hpp"
#include "catroute/errors.hpp"
#include "catroute/generators.hpp"
#include "support/oracles.hpp"

using namespace catroute;

namespace {

using Lists = std::vector<std::vector<Vertex>>;

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph(n, edges); }

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// Upper bound on |cat(v)| from counting, per ancestor u of v (v included),
// S_u plus every L_{u,i} and R_{u,i}.
std::size_t ancestor_count_bound(const RootedBinaryTree& bt) {
  const auto& t = bt.tree();
  auto helpers = [&](Vertex u) {
    std::size_t c = 1;
    if (auto l = bt.left(u)) c += t.height(*l) + 1;
    if (auto r = bt.right(u)) c += t.height(*r) + 1;
    return c;
  };
  std::size_t best = 0;
  for (Vertex v = 0; v < t.size(); ++v) {
    std::size_t total = helpers(v);
    for (Vertex u : oracle::ancestors(t, v)) total += helpers(u);
    best = std::max(best, total);
  }
  return best;
}

void require_routes(const Graph& g, const CategorySystem& s) {
  auto report = verify_all_pairs_routing(g, s);
  CHECK_MESSAGE(report.holds, report.to_string());
}

}  // namespace

TEST_SUITE("construction") {

TEST_CASE("path_categories on three vertices") {
  auto p = make(3, {{0, 1}, {1, 2}});
  auto s = path_categories(p);
  CHECK(s.to_lists() == Lists{{0}, {0, 1}, {1, 2}, {2}});
  CHECK(s.membership_dimension() == 2);
}

TEST_CASE("path_categories on two vertices") {
  auto s = path_categories(make(2, {{0, 1}}));
  CHECK(s.to_lists() == Lists{{0}, {1}});
  CHECK(s.membership_dimension() == 1);
}

TEST_CASE("path_categories numbers from the smaller-id endpoint") {
  // 1 - 0 - 2 - 3 : endpoints 1 and 3, numbering starts at 1.
  auto p = make(4, {{1, 0}, {0, 2}, {2, 3}});
  auto s = path_categories(p);
  CHECK(s.to_lists() == Lists{{0, 1}, {0, 1, 2}, {0, 2, 3}, {1}, {2, 3}, {3}});
  CHECK(s.membership_dimension() == 3);
  CHECK(diameter(p) == 3);
  CHECK(is_internally_connected(p, s).holds);
  CHECK(is_shattered(p, s).holds);
  require_routes(p, s);
}

TEST_CASE("path_categories rejects non-paths") {
  CHECK_THROWS_AS(path_categories(make(4, {{0, 1}, {0, 2}, {0, 3}})), ValidationError);
  CHECK_THROWS_AS(path_categories(Graph(1)), ValidationError);
  CHECK_THROWS_AS(path_categories(generate({.family = Family::Cycle, .n = 4})), ValidationError);
}

TEST_CASE("path_categories: memdim equals diameter") {
  for (std::size_t n = 2; n <= 40; ++n) {
    auto p = generate({.family = Family::Path, .n = n});
    auto s = path_categories(p);
    CHECK(s.membership_dimension() == n - 1);
    for (Vertex v = 0; v < n; ++v) CHECK(s.cat(v).size() == n - 1);
  }
}

TEST_CASE("binary_tree_categories on a cherry") {
  RootedBinaryTree bt(RootedTree(make(3, {{0, 1}, {0, 2}}), 0));
  auto s = binary_tree_categories(bt);
  // S_r, L_{r,0} = {r,b}, R_{r,0} = {r,a}, S_a, S_b
  CHECK(s.to_lists() == Lists{{0, 1}, {0, 1, 2}, {0, 2}, {1}, {2}});
  CHECK(s.membership_dimension() == 3);
}

TEST_CASE("binary_tree_categories on a single vertex") {
  RootedBinaryTree bt(RootedTree(Graph(1), 0));
  CHECK(binary_tree_categories(bt).to_lists() == Lists{{0}});
}

TEST_CASE("binary_tree_categories helper range stops above the deepest left level") {
  // 0 - 1 - 2 as a left spine. L_{0,i} for i in [0, 0 + height(1)] = [0, 1].
  RootedBinaryTree bt(RootedTree(make(3, {{0, 1}, {1, 2}}), 0));
  auto s = binary_tree_categories(bt);
  // S_0, S_1, S_2, L_{0,0} = {0}, L_{0,1} = {0,1}, L_{1,1} = {1}
  CHECK(s.to_lists() == Lists{{0}, {0, 1}, {0, 1, 2}, {1}, {1, 2}, {2}});
}

TEST_CASE("binary_tree_categories on random binary trees") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(60);
    auto g = random_recursive_tree(n, 2, rng);
    RootedBinaryTree bt(RootedTree(g, 0));
    auto s = binary_tree_categories(bt);
    const auto h = bt.tree().height();
    CAPTURE(trial);
    CHECK(is_internally_connected(g, s).holds);
    CHECK(is_shattered(g, s).holds);
    require_routes(g, s);
    CHECK(s.membership_dimension() <= ancestor_count_bound(bt));
    CHECK(ancestor_count_bound(bt) <= (h + 1) * (2 * h + 3));
  }
}

TEST_CASE("embed_into_binary splits a star into two dummies") {
  RootedTree star(make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 0);
  auto emb = embed_into_binary(star);
  const auto& bt = emb.embedded;
  REQUIRE(bt.size() == 7);
  CHECK(bt.is_dummy(5));
  CHECK(bt.is_dummy(6));
  CHECK(bt.left(0) == 5u);
  CHECK(bt.right(0) == 6u);
  CHECK(bt.tree().children(5).size() == 2);
  CHECK(bt.tree().children(6).size() == 2);
  for (Vertex leaf = 1; leaf <= 4; ++leaf) CHECK(bt.tree().depth(leaf) == 2);
  CHECK(emb.dummy_owner[5] == 0u);
  CHECK_FALSE(emb.dummy_owner[1].has_value());
}

TEST_CASE("embed_into_binary balances by subtree weight") {
  // Child 1 carries a 10-vertex subtree; 2, 3, 4 are leaves.
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  for (Vertex v = 5; v < 14; ++v) edges.emplace_back(v - 1 == 4 ? 1 : v - 1, v);
  RootedTree t(make(14, edges), 0);
  REQUIRE(t.children(0).size() == 4);
  auto emb = embed_into_binary(t);
  const auto& bt = emb.embedded;
  CHECK(bt.left(0) == 1u);  // weight 10 vs 3: heavy child stays directly under the root
  REQUIRE(bt.right(0));
  Vertex d = *bt.right(0);
  CHECK(bt.is_dummy(d));
  CHECK(bt.left(d) == 2u);  // 1 | 2 beats 2 | 1 only on the tie rule
  CHECK(bt.tree().depth(3) == 3);
}

TEST_CASE("embed_into_binary is the identity on binary trees") {
  for (auto g : {make(4, {{0, 1}, {1, 2}, {2, 3}}), make(3, {{0, 1}, {0, 2}})}) {
    RootedTree t(g, 0);
    auto emb = embed_into_binary(t);
    CHECK(emb.embedded.size() == t.size());
    CHECK(emb.embedded.tree().graph() == g);
    CHECK(emb.embedded.tree().height() == t.height());
  }
}

TEST_CASE("embed_into_binary preserves ancestry and bounds height") {
  Rng rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(150);
    auto g = trial % 3 == 0 ? random_recursive_tree(n, 0, rng) : random_tree(n, rng);
    RootedTree t(g, rng.below(n));
    auto emb = embed_into_binary(t);
    const auto& b = emb.embedded.tree();
    CAPTURE(trial);
    for (Vertex u = 0; u < n; ++u) {
      CHECK(emb.embedded.origin(emb.original_to_embedded[u]) == u);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(oracle::is_ancestor_by_walk(t, u, v) ==
              oracle::is_ancestor_by_walk(b, emb.original_to_embedded[u],
                                          emb.original_to_embedded[v]));
      }
    }
    for (Vertex x = n; x < emb.embedded.size(); ++x) {
      CHECK(emb.embedded.is_dummy(x));
      CHECK(b.children(x).size() == 2);
    }
    CHECK(b.height() <= 3 * t.height() + 2 * ceil_log2(n) + 3);
  }
}

TEST_CASE("tree_categories on a four-leaf star") {
  RootedTree star(make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 0);
  auto s = tree_categories(star);
  CHECK(is_internally_connected(star.graph(), s).holds);
  CHECK(is_shattered(star.graph(), s).holds);
  std::size_t routes = 0;
  CHECK(verify_all_pairs_routing(star.graph(), s, [&](const RouteTrace&) { ++routes; }).holds);
  CHECK(routes == 20);
  auto emb = embed_into_binary(star);
  CHECK(s.membership_dimension() <= binary_tree_categories(emb.embedded).membership_dimension());
}

TEST_CASE("deleting dummies outright breaks the four-leaf star") {
  RootedTree star(make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 0);
  auto s = tree_categories(star, DummyPolicy::Drop);
  // {1, 2} survives from the first dummy's subtree set and is disconnected.
  CHECK_FALSE(is_internally_connected(star.graph(), s).holds);
  auto sh = is_shattered(star.graph(), s);
  CHECK_FALSE(sh.holds);
  auto rt = verify_all_pairs_routing(star.graph(), s);
  CHECK_FALSE(rt.holds);
  CHECK(rt.witness->source == 1u);
  CHECK(rt.witness->target == 2u);
}

TEST_CASE("tree_categories on paths and a single vertex") {
  for (std::size_t n : {2, 3, 7, 16}) {
    auto p = generate({.family = Family::Path, .n = n});
    auto s = tree_categories(RootedTree(p, 0));
    require_routes(p, s);
  }
  CHECK(tree_categories(RootedTree(Graph(1), 0)).to_lists() == Lists{{0}});
}

TEST_CASE("tree_categories on random trees") {
  Rng rng(8080);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(80);
    auto g = trial % 2 ? random_tree(n, rng) : random_recursive_tree(n, 0, rng);
    RootedTree t(g, choose_root(g));
    auto s = tree_categories(t);
    CAPTURE(trial);
    CHECK(is_internally_connected(g, s).holds);
    CHECK(is_shattered(g, s).holds);
    require_routes(g, s);
    // Owners absorb their dummies' helper sets, so each owner stands in for a
    // whole dummy chain and the count is bounded by the embedded height.
    auto emb = embed_into_binary(t);
    const auto hb = emb.embedded.tree().height();
    CHECK(s.membership_dimension() <= (hb + 1) * (2 * hb + 3));
  }
}

TEST_CASE("deleting dummies outright never raises the membership dimension") {
  Rng rng(8081);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(80);
    auto g = trial % 2 ? random_tree(n, rng) : random_recursive_tree(n, 0, rng);
    RootedTree t(g, choose_root(g));
    auto emb = embed_into_binary(t);
    CAPTURE(trial);
    CHECK(tree_categories(t, DummyPolicy::Drop).membership_dimension() <=
          binary_tree_categories(emb.embedded).membership_dimension());
  }
}

TEST_CASE("graph_categories on small graphs") {
  auto c4 = generate({.family = Family::Cycle, .n = 4});
  auto s = graph_categories(c4);
  std::size_t routes = 0;
  CHECK(verify_all_pairs_routing(c4, s, [&](const RouteTrace&) { ++routes; }).holds);
  CHECK(routes == 12);

  auto k5 = generate({.family = Family::Complete, .n = 5});
  auto sk = graph_categories(k5);
  require_routes(k5, sk);
  CHECK(sk.membership_dimension() >= 1);

  CHECK_THROWS_AS(graph_categories(make(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("graph_categories on random connected graphs") {
  Rng rng(1234);
  const Family families[] = {Family::GnpConnected, Family::WattsStrogatz, Family::Grid,
                             Family::Star, Family::RandomTree};
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorSpec spec{.family = families[trial % 5], .n = 5 + rng.below(60), .p = 0.1,
                       .beta = 0.3, .seed = rng.below(1u << 30)};
    auto g = generate(spec);
    auto s = graph_categories(g);
    auto diam = diameter(g);
    CAPTURE(trial);
    require_routes(g, s);
    CHECK(s.membership_dimension() >= diam);
    auto scale = diam + ceil_log2(g.size()) + 1;
    CHECK(s.membership_dimension() <= 16 * scale * scale);
  }
}

TEST_CASE("impossibility fixture") {
  auto [g1, g2] = impossibility_fixture();
  CHECK(g1.has_edge(0, 1));
  CHECK(g1.has_edge(1, 2));
  CHECK(g2.has_edge(1, 0));
  CHECK(g2.has_edge(0, 2));

  auto s1 = graph_categories(g1);
  CHECK(verify_all_pairs_routing(g1, s1).holds);
  CHECK_FALSE(greedy_route(g2, s1, 1, 2).delivered());

  auto s2 = graph_categories(g2);
  CHECK(verify_all_pairs_routing(g2, s2).holds);
  CHECK_FALSE(greedy_route(g1, s2, 0, 2).delivered());

  CategorySystem none(3);
  CHECK_FALSE(verify_all_pairs_routing(g1, none).holds);
  CHECK_FALSE(verify_all_pairs_routing(g2, none).holds);
}

TEST_CASE("method dispatch") {
  auto p = generate({.family = Family::Path, .n = 5});
  auto star = generate({.family = Family::Star, .n = 5});
  auto c = generate({.family = Family::Cycle, .n = 5});
  CHECK(resolve_method(p, Method::Auto) == Method::Path);
  CHECK(resolve_method(star, Method::Auto) == Method::Tree);
  CHECK(resolve_method(c, Method::Auto) == Method::Graph);
  CHECK(construct_categories(p, Method::Auto) == path_categories(p));
  CHECK(parse_method("binary-tree") == Method::BinaryTree);
  CHECK_FALSE(parse_method("nope").has_value());

  auto claw = generate({.family = Family::Star, .n = 4});
  auto sb = construct_categories(claw, Method::BinaryTree);
  require_routes(claw, sb);
  CHECK_THROWS_AS(construct_categories(star, Method::BinaryTree), ValidationError);
  CHECK_THROWS_AS(construct_categories(c, Method::Tree), ValidationError);
}

}  // TEST_SUITE
