#include "catroute/routing.hpp"

#include <string>

#include "catroute/errors.hpp"

namespace catroute {

namespace {

// Shared by both greedy_route overloads so they cannot drift apart.
template <typename DistanceFn>
std::optional<Vertex> step_with(const Graph& g, Vertex u, DistanceFn&& dist) {
  const std::size_t here = dist(u);
  std::optional<Vertex> best;
  std::size_t best_d = here;
  for (Vertex v : g.neighbors(u)) {  // ascending, so strict < keeps the smallest id on ties
    std::size_t d = dist(v);
    if (d < best_d) {
      best = v;
      best_d = d;
    }
  }
  return best;
}

template <typename DistanceFn>
RouteTrace route_with(const Graph& g, Vertex source, Vertex target, std::size_t max_hops,
                      DistanceFn&& dist) {
  RouteTrace trace;
  trace.source = source;
  trace.target = target;
  trace.path.push_back(source);
  trace.hop_distances.push_back(dist(source));
  Vertex u = source;
  while (u != target) {
    auto next = step_with(g, u, dist);
    if (!next) {
      trace.outcome = RouteOutcome::Stuck;
      return trace;
    }
    std::size_t d = dist(*next);
    if (d >= trace.hop_distances.back()) {
      throw InternalError("greedy hop " + std::to_string(u) + " -> " + std::to_string(*next) +
                          " did not decrease the category distance");
    }
    if (trace.hops() >= max_hops) {
      throw InternalError("route " + std::to_string(source) + " -> " + std::to_string(target) +
                          " exceeded " + std::to_string(max_hops) + " hops");
    }
    u = *next;
    trace.path.push_back(u);
    trace.hop_distances.push_back(d);
  }
  if (trace.hop_distances.back() != 0) {
    throw InternalError("reached target with nonzero self-distance");
  }
  trace.outcome = RouteOutcome::Delivered;
  return trace;
}

}  // namespace

std::optional<Vertex> greedy_step(const Graph& g, const CategorySystem& s, Vertex u, Vertex t) {
  g.check_vertex(u);
  g.check_vertex(t);
  s.check_vertex(u);
  s.check_vertex(t);
  if (u == t) throw ArgumentError("greedy_step called at the target itself");
  return step_with(g, u, [&](Vertex v) { return s.distance(v, t); });
}

RouteTrace greedy_route(const Graph& g, const CategorySystem& s, Vertex source, Vertex target,
                        std::optional<std::size_t> max_hops) {
  g.check_vertex(source);
  g.check_vertex(target);
  s.check_vertex(source);
  s.check_vertex(target);
  return route_with(g, source, target, max_hops.value_or(s.membership_dimension() + 1),
                    [&](Vertex v) { return s.distance(v, target); });
}

TargetDistances::TargetDistances(const CategorySystem& s, Vertex target)
    : target_(target), dist_(s.universe_size(), 0) {
  auto cats = s.cat(target);
  // d(v, t) = |cat(t)| - |{C in cat(t) : v in C}|
  std::vector<std::size_t> shared(s.universe_size(), 0);
  for (CategoryIndex i : cats) {
    const auto& bits = s.category(i);
    for (auto v = bits.find_first(); v != VertexSet::npos; v = bits.find_next(v)) ++shared[v];
  }
  for (Vertex v = 0; v < dist_.size(); ++v) dist_[v] = cats.size() - shared[v];
}

RouteTrace greedy_route(const Graph& g, const TargetDistances& dist, Vertex source,
                        std::size_t max_hops) {
  g.check_vertex(source);
  return route_with(g, source, dist.target(), max_hops, dist);
}

std::string render_trace(const RouteTrace& trace, const Graph* labels) {
  auto name = [&](Vertex v) { return labels ? labels->label(v) : std::to_string(v); };
  std::string out;
  for (std::size_t i = 0; i + 1 < trace.path.size(); ++i) {
    out += name(trace.path[i]) + " -(d=" + std::to_string(trace.hop_distances[i + 1]) + ")-> " +
           name(trace.path[i + 1]) + "\n";
  }
  if (trace.delivered()) {
    out += "DELIVERED in " + std::to_string(trace.hops()) + " hops\n";
  } else {
    out += "STUCK at " + name(trace.last()) + " (d=" +
           std::to_string(trace.hop_distances.back()) + ")\n";
  }
  return out;
}

}  // namespace catroute
