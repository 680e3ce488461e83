// Brute-force reference implementations used only by tests. None of these
// touch the bitset machinery or the precomputed distance tables, so they give
// an independent second route to every quantity they check.
#ifndef CATROUTE_TESTS_ORACLES_HPP
#define CATROUTE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "catroute/categories.hpp"
#include "catroute/graph.hpp"
#include "catroute/tree.hpp"

namespace oracle {

using catroute::Vertex;
using Family = std::vector<std::set<Vertex>>;

inline Family family_of(const catroute::CategorySystem& s) {
  Family out;
  for (const auto& list : s.to_lists()) out.emplace_back(list.begin(), list.end());
  return out;
}

inline std::vector<std::size_t> cats_of(const Family& f, Vertex u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].count(u)) out.push_back(i);
  }
  return out;
}

inline std::size_t memdim(const Family& f, std::size_t n) {
  std::size_t best = 0;
  for (Vertex u = 0; u < n; ++u) best = std::max(best, cats_of(f, u).size());
  return best;
}

// |cat(b) \ cat(a)| by explicit set difference.
inline std::size_t distance(const Family& f, Vertex a, Vertex b) {
  auto ca = cats_of(f, a), cb = cats_of(f, b);
  std::vector<std::size_t> diff;
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), std::back_inserter(diff));
  return diff.size();
}

// Floyd-Warshall hop distances; INF when unreachable.
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

inline std::vector<std::vector<std::size_t>> all_pairs(const catroute::Graph& g) {
  const auto n = g.size();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(u)) d[u][v] = 1;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::size_t diameter(const catroute::Graph& g) {
  std::size_t best = 0;
  for (const auto& row : all_pairs(g))
    for (auto x : row) best = std::max(best, x);
  return best;
}

// Definition-direct: exists u in N(s), C with u, t in C and s not in C.
inline bool shattered(const catroute::Graph& g, const Family& f) {
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = 0; t < g.size(); ++t) {
      if (s == t) continue;
      bool ok = false;
      for (Vertex u : g.neighbors(s)) {
        for (const auto& c : f) ok = ok || (c.count(u) && c.count(t) && !c.count(s));
      }
      if (!ok) return false;
    }
  }
  return true;
}

inline bool internally_connected(const catroute::Graph& g, const Family& f) {
  for (const auto& c : f) {
    std::set<Vertex> seen{*c.begin()};
    std::vector<Vertex> stack{*c.begin()};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (c.count(v) && seen.insert(v).second) stack.push_back(v);
      }
    }
    if (seen.size() != c.size()) return false;
  }
  return true;
}

// Greedy routing with the documented tie rule, evaluated from scratch per hop.
struct Route {
  std::vector<Vertex> path;
  bool delivered = false;
};

inline Route route(const catroute::Graph& g, const Family& f, Vertex s, Vertex t) {
  Route r{{s}, false};
  Vertex u = s;
  while (u != t) {
    const auto here = distance(f, u, t);
    std::vector<std::pair<std::size_t, Vertex>> closer;
    for (Vertex v : g.neighbors(u)) {
      if (auto d = distance(f, v, t); d < here) closer.emplace_back(d, v);
    }
    if (closer.empty()) return r;
    u = std::min_element(closer.begin(), closer.end())->second;
    r.path.push_back(u);
  }
  r.delivered = true;
  return r;
}

inline bool all_pairs_route(const catroute::Graph& g, const Family& f) {
  for (Vertex s = 0; s < g.size(); ++s)
    for (Vertex t = 0; t < g.size(); ++t)
      if (s != t && !route(g, f, s, t).delivered) return false;
  return true;
}

// Strict ancestors of v by walking parent pointers.
inline std::vector<Vertex> ancestors(const catroute::RootedTree& t, Vertex v) {
  std::vector<Vertex> out;
  for (auto p = t.parent(v); p; p = t.parent(*p)) out.push_back(*p);
  return out;
}

inline bool is_ancestor_by_walk(const catroute::RootedTree& t, Vertex a, Vertex d) {
  for (std::optional<Vertex> x = d; x; x = t.parent(*x)) {
    if (*x == a) return true;
  }
  return false;
}

}  // namespace oracle

#endif  // CATROUTE_TESTS_ORACLES_HPP
