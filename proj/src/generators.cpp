#include "catroute/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "catroute/errors.hpp"

namespace catroute {

namespace {

constexpr int kMaxAttempts = 100;

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.size(), false);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    auto& comp = out.emplace_back(std::vector<Vertex>{s});
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex v : g.neighbors(comp[head])) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
  }
  return out;
}

Graph gnp_connected(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    edges.clear();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.chance(p)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  auto comps = components(Graph(n, edges));
  std::vector<Vertex> joined = comps.front();
  for (std::size_t c = 1; c < comps.size(); ++c) {
    Vertex a = comps[c][rng.below(comps[c].size())];
    Vertex b = joined[rng.below(joined.size())];
    edges.emplace_back(a, b);
    joined.insert(joined.end(), comps[c].begin(), comps[c].end());
  }
  return Graph(n, edges);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double beta, Rng& rng) {
  if (k % 2 != 0 || k < 2 || k >= n) {
    throw ArgumentError("watts-strogatz needs an even ring degree k with 2 <= k < n");
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::set<Edge> edges;
    auto key = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    for (Vertex i = 0; i < n; ++i) {
      for (std::size_t j = 1; j <= k / 2; ++j) edges.insert(key(i, (i + j) % n));
    }
    std::vector<std::size_t> degree(n, k);
    for (std::size_t j = 1; j <= k / 2; ++j) {
      for (Vertex i = 0; i < n; ++i) {
        if (!rng.chance(beta)) continue;
        Edge old = key(i, (i + j) % n);
        if (!edges.contains(old)) continue;
        if (degree[i] >= n - 1) continue;  // nowhere to rewire to
        Vertex w;
        do {
          w = rng.below(n);
        } while (w == i || edges.contains(key(i, w)));
        edges.erase(old);
        edges.insert(key(i, w));
        --degree[(i + j) % n];
        ++degree[w];
      }
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    Graph g(n, list);
    if (is_connected(g)) return g;
  }
  throw GenerationError("watts-strogatz graph stayed disconnected after " +
                        std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 1) return Graph(n);
  if (n == 2) {
    const std::vector<Edge> e{{0, 1}};
    return Graph(2, e);
  }
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = rng.below(n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_recursive_tree(std::size_t n, std::size_t max_children, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<std::size_t> children(n, 0);
  std::vector<Vertex> open;
  for (Vertex v = 0; v < n; ++v) {
    if (v > 0) {
      std::size_t pick = rng.below(open.size());
      Vertex parent = open[pick];
      edges.emplace_back(parent, v);
      if (max_children != 0 && ++children[parent] == max_children) {
        open[pick] = open.back();
        open.pop_back();
      }
    }
    open.push_back(v);
  }
  return Graph(n, edges);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "gnp-connected") return Family::GnpConnected;
  if (name == "random-tree") return Family::RandomTree;
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "grid") return Family::Grid;
  if (name == "star") return Family::Star;
  if (name == "complete") return Family::Complete;
  if (name == "watts-strogatz") return Family::WattsStrogatz;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::GnpConnected: return "gnp-connected";
    case Family::RandomTree: return "random-tree";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Grid: return "grid";
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    case Family::WattsStrogatz: return "watts-strogatz";
  }
  return "unknown";
}

GeneratorSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("generator spec must be a JSON object");
  GeneratorSpec spec;
  try {
    auto family = j.at("family").get<std::string>();
    auto f = parse_family(family);
    if (!f) throw ParseError("unknown generator family '" + family + "'");
    spec.family = *f;
    spec.n = j.at("n").get<std::size_t>();
    spec.p = j.value("p", spec.p);
    spec.beta = j.value("beta", spec.beta);
    spec.k = j.value("k", spec.k);
    spec.cols = j.value("cols", spec.cols);
    spec.seed = j.value("seed", spec.seed);
    if (j.contains("method")) {
      auto name = j.at("method").get<std::string>();
      auto m = parse_method(name);
      if (!m) throw ParseError("unknown construction method '" + name + "'");
      spec.method = *m;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad generator spec: ") + e.what());
  }
  return spec;
}

Graph generate(const GeneratorSpec& spec) {
  const auto n = spec.n;
  if (n == 0) throw ArgumentError("generator needs n >= 1");
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::Cycle:
      if (n < 3) throw ArgumentError("cycle needs n >= 3");
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case Family::Grid: {
      std::size_t cols = spec.cols;
      if (cols == 0) cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (Vertex v = 0; v < n; ++v) {
        if ((v + 1) % cols != 0 && v + 1 < n) edges.emplace_back(v, v + 1);
        if (v + cols < n) edges.emplace_back(v, v + cols);
      }
      break;
    }
    case Family::Star:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::Complete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case Family::RandomTree:
      return random_tree(n, rng);
    case Family::GnpConnected:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw ArgumentError("p must lie in [0, 1]");
      return gnp_connected(n, spec.p, rng);
    case Family::WattsStrogatz:
      if (!(spec.beta >= 0.0 && spec.beta <= 1.0)) throw ArgumentError("beta must lie in [0, 1]");
      return watts_strogatz(n, spec.k, spec.beta, rng);
  }
  return Graph(n, edges);
}

}  // namespace catroute
