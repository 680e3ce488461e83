#include "catroute/checks.hpp"

#include <queue>
#include <string>
#include <vector>

#include "catroute/errors.hpp"

namespace catroute {

namespace {

void check_universe(const Graph& g, const CategorySystem& s) {
  if (g.size() != s.universe_size()) {
    throw ArgumentError("category system is over " + std::to_string(s.universe_size()) +
                        " vertices but the graph has " + std::to_string(g.size()));
  }
}

bool induces_connected(const Graph& g, const VertexSet& members) {
  auto start = members.find_first();
  if (start == VertexSet::npos) return true;
  VertexSet seen(members.size());
  std::queue<Vertex> frontier;
  seen.set(start);
  frontier.push(start);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbors(u)) {
      if (members.test(v) && !seen.test(v)) {
        seen.set(v);
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == members.count();
}

bool pair_is_shattered(const Graph& g, const CategorySystem& s, Vertex src, Vertex dst) {
  for (Vertex u : g.neighbors(src)) {
    for (CategoryIndex i : s.cat(dst)) {
      if (s.contains(i, u) && !s.contains(i, src)) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::InternallyConnected: return "internally-connected";
    case Property::Shattered: return "shattered";
    case Property::AllPairsRouting: return "all-pairs-routing";
  }
  return "unknown";
}

std::string PropertyReport::to_string() const {
  std::string out(property_name(property));
  if (holds) return out + ": OK";
  out += ": FAIL witness=";
  if (!witness) return out + "?";
  if (witness->category) {
    out += "category:" + std::to_string(*witness->category);
  } else {
    out += "(" + std::to_string(witness->source.value_or(0)) + "," +
           std::to_string(witness->target.value_or(0)) + ")";
    if (witness->stuck_at) out += " stuck=" + std::to_string(*witness->stuck_at);
  }
  return out;
}

PropertyReport is_internally_connected(const Graph& g, const CategorySystem& s) {
  check_universe(g, s);
  PropertyReport report{Property::InternallyConnected};
  for (CategoryIndex i = 0; i < s.size(); ++i) {
    if (!induces_connected(g, s.category(i))) {
      report.holds = false;
      report.witness = Witness{.category = i};
      return report;
    }
  }
  return report;
}

PropertyReport is_shattered(const Graph& g, const CategorySystem& s) {
  check_universe(g, s);
  PropertyReport report{Property::Shattered};
  const auto n = g.size();
  // stamp[i] == src + 1 marks category i as already folded in for this src.
  std::vector<std::size_t> stamp(s.size(), 0);
  for (Vertex src = 0; src < n; ++src) {
    for (CategoryIndex i : s.cat(src)) stamp[i] = src + 1;
    VertexSet covered(n);
    for (Vertex u : g.neighbors(src)) {
      for (CategoryIndex i : s.cat(u)) {
        if (stamp[i] == src + 1) continue;
        stamp[i] = src + 1;
        covered |= s.category(i);
      }
    }
    covered.set(src);
    if (!covered.all()) {
      covered.flip();
      report.holds = false;
      report.witness = Witness{.source = src, .target = covered.find_first()};
      return report;
    }
  }
  return report;
}

PropertyReport verify_all_pairs_routing(const Graph& g, const CategorySystem& s,
                                         const RouteObserver& observer) {
  check_universe(g, s);
  PropertyReport report{Property::AllPairsRouting};
  const auto n = g.size();
  const auto cap = s.membership_dimension() + 1;
  std::optional<Witness> first;
  for (Vertex t = 0; t < n; ++t) {
    TargetDistances dist(s, t);
    for (Vertex src = 0; src < n; ++src) {
      if (src == t) continue;
      auto trace = greedy_route(g, dist, src, cap);
      if (observer) observer(trace);
      if (!trace.delivered()) {
        bool earlier = !first || src < *first->source ||
                       (src == *first->source && t < *first->target);
        if (earlier) first = Witness{.source = src, .target = t, .stuck_at = trace.last()};
      }
    }
  }
  if (first) {
    report.holds = false;
    report.witness = first;
  }
  return report;
}

bool witness_reproduces(const Graph& g, const CategorySystem& s, const PropertyReport& report) {
  if (report.holds || !report.witness) return false;
  const auto& w = *report.witness;
  switch (report.property) {
    case Property::InternallyConnected:
      return w.category && *w.category < s.size() && !induces_connected(g, s.category(*w.category));
    case Property::Shattered:
      return w.source && w.target && *w.source != *w.target &&
             !pair_is_shattered(g, s, *w.source, *w.target);
    case Property::AllPairsRouting: {
      if (!w.source || !w.target || !w.stuck_at) return false;
      auto trace = greedy_route(g, s, *w.source, *w.target);
      return !trace.delivered() && trace.last() == *w.stuck_at;
    }
  }
  return false;
}

ImplicationReport check_lemma_implications(const Graph& g, const CategorySystem& s) {
  ImplicationReport out{
      .tree = is_tree(g),
      .internally_connected = is_internally_connected(g, s),
      .shattered = is_shattered(g, s),
      .routing = verify_all_pairs_routing(g, s),
  };
  if (!out.shattered.holds) {
    const auto& w = *out.shattered.witness;
    auto trace = greedy_route(g, s, *w.source, *w.target);
    if (trace.delivered() || out.routing.holds) {
      throw InternalError("(G, S) is not shattered at (" + std::to_string(*w.source) + "," +
                          std::to_string(*w.target) + ") yet that pair routes");
    }
  }
  if (out.tree && out.internally_connected.holds && out.shattered.holds && !out.routing.holds) {
    throw InternalError("tree with an internally connected, shattered system failed to route: " +
                        out.routing.to_string());
  }
  return out;
}

}  // namespace catroute
