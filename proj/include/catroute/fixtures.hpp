#ifndef CATROUTE_FIXTURES_HPP
#define CATROUTE_FIXTURES_HPP

#include <string>
#include <vector>

#include "catroute/categories.hpp"
#include "catroute/graph.hpp"

namespace catroute {

struct CounterFixture {
  Graph graph;
  CategorySystem categories;
  Vertex u = 0, v = 1, w = 2, x = 3;
};

/**
 * Four-cycle u-v-w-x-u with categories {u,v,x}, {v,w,x}, {u,v}, {v,w}, {w,x}, {u,x}.
 *
 * Internally connected and shattered, yet greedy routing from v to x is
 * stuck at v: u, v and w each lack exactly two of x's four categories.
 */
CounterFixture counter_fixture();

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Counter-example checks and the impossibility cross-test, one result per assertion.
std::vector<FixtureResult> run_fixtures();

}  // namespace catroute

#endif  // CATROUTE_FIXTURES_HPP
