import json

import pytest

import catroute


def test_path_construction_routes_shortest():
    g = catroute.generate("path", 10)
    s = catroute.construct(g, "path")
    assert s.memdim == catroute.diameter(g) == 9
    tr = catroute.greedy_route(g, s, 0, 9)
    assert tr.delivered
    assert tr.path == list(range(10))
    assert tr.hop_distances == sorted(tr.hop_distances, reverse=True)


def test_counter_fixture_via_python():
    g = catroute.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    s = catroute.CategorySystem(4, [[0, 1, 3], [1, 2, 3], [0, 1], [1, 2], [2, 3], [0, 3]])
    assert catroute.is_shattered(g, s)
    assert catroute.is_internally_connected(g, s)
    report = catroute.verify_all_pairs_routing(g, s)
    assert not report
    assert (report.source, report.target) == (1, 3)
    assert [s.distance(u, 3) for u in (0, 1, 2)] == [2, 2, 2]
    assert catroute.greedy_step(g, s, 1, 3) is None


def test_graph_categories_on_random_graph():
    g = catroute.generate("gnp-connected", 40, seed=3, p=0.1)
    s = catroute.graph_categories(g)
    assert catroute.verify_all_pairs_routing(g, s).holds
    assert s.memdim >= catroute.diameter(g)
    again = catroute.CategorySystem.parse(s.to_json())
    assert again == s


def test_edge_list_round_trip():
    g = catroute.Graph.parse("n 3\n0 1\n1 2\n")
    assert g.m == 2
    assert catroute.Graph.parse(g.to_edge_list()) == g


def test_errors_map_to_python_exceptions():
    with pytest.raises(catroute.ParseError):
        catroute.Graph.parse("0 x\n")
    with pytest.raises(ValueError):
        catroute.CategorySystem(2, [[5]])
    with pytest.raises(catroute.DisconnectedError):
        catroute.graph_categories(catroute.Graph(3, [(0, 1)]))
    with pytest.raises(catroute.ArgumentError):
        catroute.construct(catroute.Graph(2, [(0, 1)]), "nope")


def test_bench_and_fixtures():
    spec = json.dumps([{"family": "star", "n": 20}, {"family": "grid", "n": 16}])
    csv = catroute.bench_csv(spec)
    assert csv == catroute.bench_csv(spec)
    lines = csv.strip().split("\n")
    assert lines[0].startswith("seed,family,n,m,diam,memdim")
    assert len(lines) == 3
    assert all(passed for _, passed, _ in catroute.run_fixtures())
