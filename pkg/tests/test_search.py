import itertools
import math

import jsonlines
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats, integers

from openspectral.distances import distinct_distances, DEFAULT_CLUSTER_TOL
from openspectral.domains import UnitBall, default_ball_tolerance
from openspectral.ortho import PointSet, check_orthogonal, packing_bound_check, separation_radius
from openspectral.search import (
    OrthogonalityGraph, root_triangle_candidates, longest_collinear_chain, max_clique_search,
    maximum_clique, greedy_clique, STRATEGIES, load_strategy, growth_profile,
)
from openspectral.search.graph import horizon_for
from openspectral.specfun import Order, zero_count
from openspectral.utils import HorizonError


def assert_sound(result, d, tol=None):
    points = result.point_set
    assert check_orthogonal(UnitBall(d), points, tol=tol).verdict
    if len(points) > 1:
        diameter = points.diameter()
        match_tol = tol if tol is not None else default_ball_tolerance(diameter)
        available = UnitBall(d).zero_set(horizon_for(diameter)).count_up_to(diameter, match_tol)
        merge = 10 * tol if tol is not None else DEFAULT_CLUSTER_TOL
        assert distinct_distances(points, mode="clustered", tol=merge).distinct_count <= available


def test_chain_examples():
    r1 = separation_radius(UnitBall(2))
    result = longest_collinear_chain(2, r1 + 0.01)
    assert result.size == 2
    assert result.point_set.points[1][0] == pytest.approx(r1)
    assert not result.truncated

    assert longest_collinear_chain(2, 0.5).size == 1

    wide = longest_collinear_chain(2, 3, tol=1e-6)
    assert wide.size >= 2
    assert_sound(wide, 2, 1e-6)


def test_chain_budget_zero_truncates():
    result = longest_collinear_chain(2, 1, budget=0)
    assert result.size == 1 and result.truncated
    assert result.point_set.points == ((0.0, 0.0),)


def test_chain_horizon_shortfall():
    with pytest.raises(HorizonError):
        longest_collinear_chain(2, 3, zero_set=UnitBall(2).zero_set(4))


@pytest.mark.parametrize("R", [1, 2, 4])
def test_chain_results_respect_packing(R):
    result = longest_collinear_chain(2, R)
    assert_sound(result, 2)
    report = packing_bound_check(result.point_set, R, 0.609835)
    assert report.min_pairwise_distance >= 0.609835 - 1e-6
    assert report.count_ok


def test_clique_on_graph_without_edges():
    graph = OrthogonalityGraph.from_point_set(PointSet([(0.0, 0.0), (0.3, 0.0), (0.0, 0.3)]), UnitBall(2))
    assert graph.graph.number_of_edges() == 0
    result = max_clique_search(graph)
    assert result.size == 1


def test_clique_on_equilateral_triangle():
    r1 = separation_radius(UnitBall(2))
    triangle = PointSet([(0.0, 0.0), (r1, 0.0), (r1 / 2, r1 * math.sqrt(3) / 2)])
    graph = OrthogonalityGraph.from_point_set(triangle, UnitBall(2))
    assert graph.graph.number_of_edges() == 3
    result = max_clique_search(graph)
    assert result.size == 3
    assert_sound(result, 2)


def test_clique_budget_keeps_a_valid_clique():
    candidates = root_triangle_candidates(2, 1)
    graph = OrthogonalityGraph.from_point_set(candidates, UnitBall(2))
    result = max_clique_search(graph, budget=0)
    assert result.truncated and result.size == 1
    assert result.point_set.points == (candidates[0],)
    assert_sound(result, 2)

    clique, truncated, nodes, _ = maximum_clique({0: {1}, 1: {0}}, budget=0)
    assert clique == [0] and truncated and nodes == 0
    clique, truncated, _, _ = maximum_clique({0: {1}, 1: {0}}, budget=1)
    assert clique == [0, 1] and not truncated
    assert maximum_clique({}, budget=0)[0] == []


def test_triangle_candidates_contain_the_equilateral_apex():
    r1 = separation_radius(UnitBall(2))
    candidates = root_triangle_candidates(2, 1)
    assert (0.0, 0.0) in candidates.points
    assert any(abs(x - r1 / 2) < 1e-12 and abs(y - r1 * math.sqrt(3) / 2) < 1e-12 for x, y in candidates)
    assert all(math.hypot(x, y) <= 1 + 1e-12 for x, y in candidates)
    lifted = root_triangle_candidates(3, 1)
    assert lifted.dimension == 3 and len(lifted) == len(candidates)


@pytest.mark.parametrize("R", [1, 2, 4])
def test_clique_search_is_sound(R):
    result = load_strategy({"name": "clique"}).run(2, R)
    assert result.size >= 3
    assert_sound(result, 2)
    assert packing_bound_check(result.point_set, R, separation_radius(UnitBall(2))).ok


@settings(max_examples=50, deadline=None)
@given(integers(min_value=1, max_value=20), floats(min_value=0.05, max_value=0.95), integers(0, 2 ** 16))
def test_maximum_clique_matches_networkx(n, p, seed):
    graph = nx.gnp_random_graph(n, p, seed=seed)
    adjacency = {v: set(graph.neighbors(v)) for v in graph.nodes}
    clique, truncated, _, _ = maximum_clique(adjacency)
    assert not truncated
    assert len(clique) == max(len(c) for c in nx.find_cliques(graph))
    assert all(graph.has_edge(a, b) for a, b in itertools.combinations(clique, 2))


def test_clique_subgraphs_of_a_fifty_vertex_graph():
    graph = nx.gnp_random_graph(50, 0.5, seed=3)
    adjacency = {v: set(graph.neighbors(v)) for v in graph.nodes}
    clique, _, _, _ = maximum_clique(adjacency)
    assert len(clique) == max(len(c) for c in nx.find_cliques(graph))
    for start in range(0, 50, 10):
        sub = graph.subgraph(range(start, start + 20))
        sub_adjacency = {v: set(sub.neighbors(v)) for v in sub.nodes}
        assert len(maximum_clique(sub_adjacency)[0]) == max(len(c) for c in nx.find_cliques(sub))


def test_greedy_clique_is_a_clique():
    graph = nx.gnp_random_graph(30, 0.4, seed=11)
    adjacency = {v: set(graph.neighbors(v)) for v in graph.nodes}
    clique = greedy_clique(adjacency)
    assert clique == sorted(clique)
    assert all(graph.has_edge(a, b) for a, b in itertools.combinations(clique, 2))


def test_graph_subgraph_renumbers():
    r1 = separation_radius(UnitBall(2))
    points = PointSet([(0.0, 0.0), (0.3, 0.0), (r1, 0.0)])
    graph = OrthogonalityGraph.from_point_set(points, UnitBall(2))
    sub = graph.subgraph([0, 2])
    assert len(sub) == 2 and sub.graph.has_edge(0, 1)


def test_growth_profile_examples():
    table = growth_profile(2, [1], "chain")
    assert table["size"].iloc[0] >= 2

    empty = growth_profile(2, [], "chain")
    assert len(empty) == 0
    assert list(empty.columns) == ["R", "size", "distinct_distances", "available_roots", "truncated"]

    table = growth_profile(2, [1, 2, 4, 8], "chain")
    for R, distinct in zip(table["R"], table["distinct_distances"]):
        assert distinct <= zero_count(Order(2), 2 * math.pi * 2 * R)
    assert (table["distinct_distances"] <= table["available_roots"]).all()


def test_growth_profile_rejects_unsorted_radii():
    with pytest.raises(ValueError):
        growth_profile(2, [2, 1], "chain")


def test_strategy_registry():
    assert set(STRATEGIES) == {"chain", "clique"}
    strategy = load_strategy({"name": "Chain", "budget": 5, "tol": 1e-6})
    assert strategy.budget == 5 and strategy.tol == 1e-6


def test_search_is_deterministic():
    first = longest_collinear_chain(2, 3, tol=1e-6)
    second = longest_collinear_chain(2, 3, tol=1e-6)
    assert first.point_set.to_csv() == second.point_set.to_csv()
    assert first.log_records() == second.log_records()


def test_search_log(tmp_path):
    result = longest_collinear_chain(2, 1)
    path = str(tmp_path / "search.jsonl")
    result.write_log(path)
    with jsonlines.open(path) as reader:
        records = list(reader)
    assert records[-1]["event"] == "summary"
    assert records[-1]["size"] == result.size
    assert [r["size"] for r in records if r["event"] == "incumbent"] == [1, 2]
