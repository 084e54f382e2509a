"""Reducible configurations, their extensions and the recursive class coloring."""
from __future__ import annotations

import random
from itertools import product

import pytest

from dpcolor.cover.assignment import (
    ListAssignment,
    MatchingAssignment,
    identity_assignment,
    injective_maps,
    random_full_assignment,
    random_lists,
)
from dpcolor.cover.cover import CoverGraph, Infeasible, Transversal, build_cover, verify_transversal
from dpcolor.errors import BudgetExceeded, ClassViolationError, PreconditionError
from dpcolor.graph.core import Graph
from dpcolor.graph.embedding import PlaneEmbedding
from dpcolor.harness.fixtures import complete_graph, fixture
from dpcolor.harness.generate import generate_class_member
from dpcolor.reducer.configs import LowDegreeVertex, SourceConfig, find_reducible, source_configs
from dpcolor.reducer.extend import extend_low_degree, extend_source_config
from dpcolor.reducer.runner import color_any_graph, color_class_graph, color_class_graph_traced

# z = 0 and the 5-face 1..5; [0 1 2] is the triangle on edge 1-2.
SOURCE_GRAPH = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (0, 1), (0, 2)])
SOURCE = SourceConfig(0, (1, 2, 3, 4, 5))
SOURCE_LISTS = ListAssignment({0: (0, 1), 1: (0, 1, 2), 2: (0, 1, 2), 3: (0, 1), 4: (0, 1), 5: (0, 1)})


def four_lists(g: Graph, rng: random.Random) -> tuple[ListAssignment, MatchingAssignment]:
    lists = random_lists(g.n, 4, 7, rng)
    return lists, random_full_assignment(g, lists, rng)


def test_cube_reduces_at_its_first_vertex():
    assert find_reducible(fixture("q3")) == LowDegreeVertex(0)


def test_icosidodecahedron_has_a_source_at_every_pentagon_edge(icosidodecahedron):
    configs = list(source_configs(icosidodecahedron))
    assert len(configs) == 60
    assert len({c.vertices for c in configs}) == 60
    cfg = find_reducible(icosidodecahedron)
    assert isinstance(cfg, SourceConfig)
    assert cfg.z == min(c.z for c in configs)
    v1, v2 = cfg.shared_edge
    assert v1 < v2 and cfg.z not in cfg.face


def test_source_faces_are_listed_from_the_shared_edge(icosidodecahedron):
    g = icosidodecahedron.graph
    for cfg in source_configs(icosidodecahedron):
        face = cfg.face
        assert all(face[i + 1] in g.adjacency[face[i]] for i in range(4))
        assert face[0] in g.adjacency[face[4]]
        assert {face[0], face[1]} <= set(g.adjacency[cfg.z])


def test_dodecahedron_has_no_source():
    assert list(source_configs(fixture("dodecahedron"))) == []


def test_source_extension_on_every_matching_pattern():
    """Residual sizes (z, v1..v5) = (2, 3, 3, 2, 2, 2); every full matching pattern extends."""
    edges = list(SOURCE_GRAPH.edges())
    options = [list(injective_maps(SOURCE_LISTS[u], SOURCE_LISTS[v])) for u, v in edges]
    count = 0
    for choice in product(*options):
        cover = CoverGraph(SOURCE_GRAPH, SOURCE_LISTS, MatchingAssignment(dict(zip(edges, choice))))
        out = extend_source_config(cover, {}, SOURCE)
        verify_transversal(cover, Transversal(out))
        count += 1
    assert count == 31_104


def test_source_extension_needs_long_residuals():
    lists = ListAssignment({**SOURCE_LISTS.lists, 1: (0, 1)})
    cover = build_cover(SOURCE_GRAPH, lists, identity_assignment(SOURCE_GRAPH, lists))
    with pytest.raises(PreconditionError):
        extend_source_config(cover, {}, SOURCE)


def test_low_degree_extension_picks_the_smallest_surviving_color():
    g = Graph.from_edges(4, [(0, 3), (1, 3), (2, 3)])
    lists = ListAssignment.uniform(4, 4)
    cover = build_cover(g, lists, identity_assignment(g, lists))
    assert extend_low_degree(cover, {0: 0, 1: 2, 2: 1}, LowDegreeVertex(3)) == {0: 0, 1: 2, 2: 1, 3: 3}


def test_low_degree_extension_preconditions():
    g = complete_graph(5)
    lists = ListAssignment.uniform(5, 4)
    cover = build_cover(g, lists, identity_assignment(g, lists))
    with pytest.raises(PreconditionError):
        extend_low_degree(cover, {0: 0, 1: 1, 2: 2, 3: 3}, LowDegreeVertex(4))
    short = ListAssignment.uniform(5, 3)
    cover = build_cover(g, short, identity_assignment(g, short))
    with pytest.raises(PreconditionError):
        extend_low_degree(cover, {}, LowDegreeVertex(4))


@pytest.mark.parametrize("name", ["c4", "c5", "c6", "q3", "dodecahedron", "icosidodecahedron", "theta"])
def test_class_fixtures_are_colored(name, rng):
    emb = fixture(name)
    for _ in range(5):
        lists, matching = four_lists(emb.graph, rng)
        t = color_class_graph(emb, lists, matching)
        verify_transversal(build_cover(emb.graph, lists, matching), t)


@pytest.mark.parametrize("seed", range(10))
def test_generated_members_are_colored(seed):
    r = random.Random(seed)
    emb = generate_class_member(seed, r.randint(8, 30))
    lists, matching = four_lists(emb.graph, r)
    t, trace = color_class_graph_traced(emb, lists, matching)
    assert len(t.choice) == emb.graph.n
    assert trace.steps[-1] == "verified transversal against the full cover"


def test_source_configs_drive_the_recursion(icosidodecahedron, rng):
    lists, matching = four_lists(icosidodecahedron.graph, rng)
    _, trace = color_class_graph_traced(icosidodecahedron, lists, matching, base_case_size=1)
    assert trace.source_configs >= 1
    assert trace.low_degree >= 1
    assert any("found source" in step for step in trace.steps)


def test_components_are_colored_separately():
    emb = PlaneEmbedding.from_rotation([[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]])
    lists = ListAssignment.uniform(6, 4)
    t, trace = color_class_graph_traced(emb, lists, identity_assignment(emb.graph, lists), base_case_size=1)
    assert sorted(t.choice) == list(range(6))
    assert trace.steps[1] == "split 6 vertices into 2 components"


def test_empty_graph_has_the_empty_transversal():
    emb = PlaneEmbedding.from_rotation([])
    assert color_class_graph(emb, ListAssignment({}), MatchingAssignment.empty()) == Transversal({})


def test_k4_is_outside_the_class():
    emb = fixture("k4")
    lists = ListAssignment.uniform(4, 4)
    with pytest.raises(ClassViolationError):
        color_class_graph(emb, lists, identity_assignment(emb.graph, lists))


def test_class_coloring_needs_four_lists():
    emb = fixture("c5")
    lists = ListAssignment.uniform(5, 3)
    with pytest.raises(PreconditionError):
        color_class_graph(emb, lists, identity_assignment(emb.graph, lists))


def test_class_coloring_respects_budget(icosidodecahedron):
    lists = ListAssignment.uniform(30, 4)
    with pytest.raises(BudgetExceeded):
        color_class_graph(icosidodecahedron, lists, identity_assignment(icosidodecahedron.graph, lists), base_case_size=30, budget=0)


def test_any_graph_fallback():
    g = complete_graph(4)
    three = ListAssignment.uniform(4, 3)
    assert isinstance(color_any_graph(g, three, identity_assignment(g, three)), Infeasible)
    four = ListAssignment.uniform(4, 4)
    assert isinstance(color_any_graph(g, four, identity_assignment(g, four)), Transversal)
