#include "catroute/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <queue>
#include <sstream>

#include "catroute/errors.hpp"

namespace catroute {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  check_vertex(v);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size()) {
    throw ArgumentError("expected " + std::to_string(size()) + " labels, got " +
                        std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

std::string Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::check_vertex(Vertex v) const {
  if (v >= size()) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(size()) + ")");
  }
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::size_t parse_id(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError("negative vertex id '" + std::string(token) + "'", line);
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!seen_content && tokens[0] == "n") {
      seen_content = true;
      if (tokens.size() != 2) throw ParseError("header must be 'n <count>'", line_no);
      declared = parse_id(tokens[1], line_no);
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) + " tokens",
                       line_no);
    }
    Vertex u = parse_id(tokens[0], line_no);
    Vertex v = parse_id(tokens[1], line_no);
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(u));
    }
    edges.emplace_back(u, v);
    edge_lines.push_back(line_no);
  }

  std::size_t n = 0;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  if (declared) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first >= *declared || edges[i].second >= *declared) {
        throw ValidationError("line " + std::to_string(edge_lines[i]) +
                              ": vertex id exceeds declared count " +
                              std::to_string(*declared));
      }
    }
    n = *declared;
  }
  return Graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex s) {
  g.check_vertex(s);
  std::vector<std::optional<std::size_t>> dist(g.size());
  std::queue<Vertex> frontier;
  dist[s] = 0;
  frontier.push(s);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbors(u)) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  std::size_t ecc = 0;
  for (Vertex w = 0; w < dist.size(); ++w) {
    if (!dist[w]) throw DisconnectedError(v, w);
    ecc = std::max(ecc, *dist[w]);
  }
  return ecc;
}

std::size_t diameter(const Graph& g) {
  if (g.size() == 0) throw ArgumentError("diameter of an empty graph is undefined");
  std::size_t diam = 0;
  for (Vertex v = 0; v < g.size(); ++v) diam = std::max(diam, eccentricity(g, v));
  return diam;
}

bool is_tree(const Graph& g) {
  return g.size() >= 1 && g.edge_count() + 1 == g.size() && is_connected(g);
}

bool is_path(const Graph& g) {
  if (g.size() < 2 || !is_tree(g)) return false;
  std::size_t ends = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto d = g.degree(v);
    if (d == 1) ++ends;
    else if (d != 2) return false;
  }
  return ends == 2;
}

Vertex choose_root(const Graph& g, RootConstraint constraint) {
  if (g.size() == 0) throw ArgumentError("cannot choose a root in an empty graph");
  std::optional<Vertex> best;
  std::size_t best_ecc = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (constraint == RootConstraint::MaxDegree2 && g.degree(v) > 2) continue;
    auto ecc = eccentricity(g, v);
    if (!best || ecc < best_ecc) {
      best = v;
      best_ecc = ecc;
    }
  }
  if (!best) throw ArgumentError("no vertex of degree at most 2");
  return *best;
}

}  // namespace catroute
