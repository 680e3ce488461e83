#ifndef CATROUTE_CHECKS_HPP
#define CATROUTE_CHECKS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "catroute/categories.hpp"
#include "catroute/graph.hpp"
#include "catroute/routing.hpp"

namespace catroute {

enum class Property { InternallyConnected, Shattered, AllPairsRouting };

std::string_view property_name(Property p);

/// Counterexample for a failed property. Which fields are set depends on the property.
struct Witness {
  std::optional<CategoryIndex> category;  // internally-connected
  std::optional<Vertex> source;           // shattered, all-pairs-routing
  std::optional<Vertex> target;
  std::optional<Vertex> stuck_at;         // all-pairs-routing
};

struct PropertyReport {
  Property property;
  bool holds = true;
  std::optional<Witness> witness;

  /// "<property>: OK" or "<property>: FAIL witness=<...>"
  std::string to_string() const;
};

/// Every category induces a connected subgraph. Witness: first failing category index.
PropertyReport is_internally_connected(const Graph& g, const CategorySystem& s);

/**
 * For every ordered s != t some neighbour u of s (u == t allowed) shares a
 * category with t that excludes s. Witness: first failing (s, t) in
 * lexicographic order.
 */
PropertyReport is_shattered(const Graph& g, const CategorySystem& s);

using RouteObserver = std::function<void(const RouteTrace&)>;

/**
 * Greedy-routes all n(n-1) ordered pairs. Witness: first failing (s, t) in
 * lexicographic order, with the vertex where the message got stuck. The
 * observer, when given, sees every trace.
 */
PropertyReport verify_all_pairs_routing(const Graph& g, const CategorySystem& s,
                                         const RouteObserver& observer = {});

/// Re-evaluates a failed report's witness on its own; true when the failure reproduces.
bool witness_reproduces(const Graph& g, const CategorySystem& s, const PropertyReport& report);

struct ImplicationReport {
  bool tree = false;
  PropertyReport internally_connected;
  PropertyReport shattered;
  PropertyReport routing;
};

/**
 * Evaluates all three properties and checks the two implications that tie them together:
 *   not shattered => the shattered witness pair itself fails to route;
 *   tree, internally connected and shattered => all pairs route.
 * Throws InternalError if either implication is violated.
 */
ImplicationReport check_lemma_implications(const Graph& g, const CategorySystem& s);

}  // namespace catroute

#endif  // CATROUTE_CHECKS_HPP
