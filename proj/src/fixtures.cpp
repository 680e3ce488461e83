#include "catroute/fixtures.hpp"

#include "catroute/checks.hpp"
#include "catroute/construction.hpp"
#include "catroute/routing.hpp"

namespace catroute {

CounterFixture counter_fixture() {
  CounterFixture f;
  const std::vector<Edge> cycle{{f.u, f.v}, {f.v, f.w}, {f.w, f.x}, {f.x, f.u}};
  f.graph = Graph(4, cycle);
  f.graph.set_labels({"u", "v", "w", "x"});
  f.categories = CategorySystem(4, std::vector<std::vector<Vertex>>{
                                       {f.u, f.v, f.x},
                                       {f.v, f.w, f.x},
                                       {f.u, f.v},
                                       {f.v, f.w},
                                       {f.w, f.x},
                                       {f.u, f.x},
                                   });
  return f;
}

namespace {

FixtureResult expect(std::string name, bool ok, std::string detail) {
  return FixtureResult{std::move(name), ok, std::move(detail)};
}

// S built for `home` must route everything there and strand from -> to on `away`.
std::vector<FixtureResult> cross_check(const std::string& tag, const Graph& home,
                                       const Graph& away, Vertex from, Vertex to) {
  auto s = graph_categories(home);
  auto here = verify_all_pairs_routing(home, s);
  auto there = greedy_route(away, s, from, to);
  return {
      expect("impossibility " + tag + ": all pairs route on home graph", here.holds,
             here.to_string()),
      expect("impossibility " + tag + ": " + away.label(from) + "->" + away.label(to) +
                 " stuck on other graph",
             !there.delivered(), render_trace(there, &away)),
  };
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  std::vector<FixtureResult> out;
  auto f = counter_fixture();
  const auto& g = f.graph;
  const auto& s = f.categories;

  auto ic = is_internally_connected(g, s);
  out.push_back(expect("counter: internally connected", ic.holds, ic.to_string()));
  auto sh = is_shattered(g, s);
  out.push_back(expect("counter: shattered", sh.holds, sh.to_string()));

  auto trace = greedy_route(g, s, f.v, f.x);
  bool stuck_at_v = !trace.delivered() && trace.last() == f.v && trace.path.size() == 1;
  out.push_back(expect("counter: route v->x stuck at v", stuck_at_v, render_trace(trace, &g)));

  auto du = s.distance(f.u, f.x), dv = s.distance(f.v, f.x), dw = s.distance(f.w, f.x);
  out.push_back(expect("counter: d(u,x) = d(v,x) = d(w,x) = 2", du == 2 && dv == 2 && dw == 2,
                       "d(u,x)=" + std::to_string(du) + " d(v,x)=" + std::to_string(dv) +
                           " d(w,x)=" + std::to_string(dw)));

  auto [g1, g2] = impossibility_fixture();
  constexpr Vertex s_id = 0, u_id = 1, t_id = 2;
  for (auto& r : cross_check("G1", g1, g2, u_id, t_id)) out.push_back(std::move(r));
  for (auto& r : cross_check("G2", g2, g1, s_id, t_id)) out.push_back(std::move(r));
  return out;
}

}  // namespace catroute
