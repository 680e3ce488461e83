#ifndef CATROUTE_ROUTING_HPP
#define CATROUTE_ROUTING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catroute/categories.hpp"
#include "catroute/graph.hpp"

namespace catroute {

enum class RouteOutcome { Delivered, Stuck };

/// Vertex sequence of one greedy route and the category distance to the target at each vertex.
struct RouteTrace {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<Vertex> path;
  RouteOutcome outcome = RouteOutcome::Stuck;
  std::vector<std::size_t> hop_distances;

  bool delivered() const noexcept { return outcome == RouteOutcome::Delivered; }
  std::size_t hops() const noexcept { return path.empty() ? 0 : path.size() - 1; }
  /// Last vertex reached; the stuck vertex when the route failed.
  Vertex last() const { return path.back(); }
};

/**
 * One forwarding decision at u for a message addressed to t.
 *
 * Picks the neighbour v of u with the smallest d(v, t) among those with
 * d(v, t) < d(u, t), ties to the smallest id. Returns nullopt when no
 * neighbour is strictly closer. Throws ArgumentError when u == t.
 */
std::optional<Vertex> greedy_step(const Graph& g, const CategorySystem& s, Vertex u, Vertex t);

/**
 * Follows greedy_step from source until the target or a dead end.
 *
 * max_hops defaults to memdim + 1. Exceeding it, or a hop that fails to
 * decrease the distance, throws InternalError.
 */
RouteTrace greedy_route(const Graph& g, const CategorySystem& s, Vertex source, Vertex target,
                        std::optional<std::size_t> max_hops = std::nullopt);

/**
 * d(v, t) for every v and a fixed target t, precomputed in one pass over cat(t).
 *
 * Routing to a common target from many sources through this table gives the
 * same traces as greedy_route, without re-evaluating set differences.
 */
class TargetDistances {
 public:
  TargetDistances(const CategorySystem& s, Vertex target);

  Vertex target() const noexcept { return target_; }
  std::size_t operator()(Vertex v) const { return dist_.at(v); }

 private:
  Vertex target_;
  std::vector<std::size_t> dist_;
};

RouteTrace greedy_route(const Graph& g, const TargetDistances& dist, Vertex source,
                        std::size_t max_hops);

/// Hop lines "u -(d=k)-> v" (k = d(v, target)) then "DELIVERED in h hops" or "STUCK at u (d=k)".
std::string render_trace(const RouteTrace& trace, const Graph* labels = nullptr);

}  // namespace catroute

#endif  // CATROUTE_ROUTING_HPP
