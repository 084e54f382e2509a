"""Graph parsing, short cycles, the class check and plane embeddings."""
from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.errors import EmbeddingError, GraphFormatError
from dpcolor.graph.core import Graph, connected_components, parse_graph, serialize_graph
from dpcolor.graph.cycles import canonical_cycle, check_class_membership, enumerate_short_cycles
from dpcolor.graph.embedding import (
    PlaneEmbedding,
    medial_embedding,
    read_embedding,
    validate_embedding,
    write_embedding,
)
from dpcolor.harness.fixtures import FIXTURES, complete_graph, fixture, wheel


@st.composite
def small_graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_parse_edge_list_with_header():
    g = parse_graph("# triangle plus pendant\n4 4\n0 1\n1 2\n0 2\n2 3\n")
    assert (g.n, g.m) == (4, 4)
    assert g.adjacency[2] == (0, 1, 3)


def test_parse_edge_list_without_header():
    g = parse_graph("0 1\n1 2\n2 0\n")
    assert (g.n, g.m) == (3, 3)


def test_first_edge_is_not_mistaken_for_a_header():
    g = parse_graph("0 1\n1 2\n")
    assert (g.n, g.m) == (3, 2)


def test_parse_dimacs_is_one_based():
    g = parse_graph("c a path\np edge 3 2\ne 1 2\ne 2 3\n")
    assert list(g.edges()) == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text",
    [
        "0 1\n2 2\n1 2\n",
        "0 1\n1 2\n1 0\n",
        "0 x\n",
        "0 1 2\n",
        "1 2\ne 1 2\n",
        "2 1\n0 5\n",
        "2 1\n0 0\n",
        "p edge 2 1\ne 0 1\n",
        "0 -1\n",
    ],
)
def test_parse_rejects_malformed_input(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_serialize_then_parse_keeps_the_graph():
    g = fixture("dodecahedron").graph
    assert parse_graph(serialize_graph(g)) == g


def test_empty_text_is_the_empty_graph():
    assert parse_graph("# nothing\n") == Graph(0, ())


def test_connected_components_order_by_smallest_member():
    g = Graph.from_edges(6, [(0, 3), (1, 2), (4, 5)])
    assert connected_components(g) == [[0, 3], [1, 2], [4, 5]]


def test_canonical_cycle_rotates_and_orients():
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
    assert canonical_cycle((2, 0, 3, 1)) == (0, 2, 1, 3)
    assert canonical_cycle((0, 3, 2, 1)) == (0, 1, 2, 3)


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_short_cycles_match_networkx(g: Graph):
    ours = enumerate_short_cycles(g, 4)
    nxg = nx.Graph(list(g.edges()))
    nxg.add_nodes_from(range(g.n))
    theirs = [c for c in nx.simple_cycles(nxg, length_bound=4) if len(c) >= 3]
    assert sorted(len(c) for c in ours) == sorted(len(c) for c in theirs)
    assert {frozenset(c) for c in ours if len(c) == 3} == {frozenset(c) for c in theirs if len(c) == 3}
    assert ours == sorted(set(ours), key=lambda c: (len(c), c))


def test_k4_violation_is_reported_canonically():
    v = check_class_membership(complete_graph(4))
    assert (v.c4, v.c3, v.shared_edge) == ((0, 1, 2, 3), (0, 1, 2), (0, 1))


def test_wheel_violation():
    v = check_class_membership(wheel(5).graph)
    assert (v.c4, v.c3, v.shared_edge) == ((0, 1, 2, 3), (0, 1, 2), (0, 1))


@pytest.mark.parametrize("name", ["c4", "c5", "c6", "q3", "dodecahedron", "icosidodecahedron", "theta"])
def test_class_members(name):
    assert check_class_membership(fixture(name).graph) is None


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_faces_satisfy_euler(name):
    emb = fixture(name)
    g = emb.graph
    assert g.n - g.m + len(emb.faces) == 2
    assert sum(f.length for f in emb.faces) == 2 * g.m
    ok, _ = nx.check_planarity(nx.Graph(list(g.edges())))
    assert ok


def test_cube_faces_are_squares():
    assert sorted(f.length for f in fixture("q3").faces) == [4] * 6


def test_every_half_edge_lies_on_one_face(icosidodecahedron: PlaneEmbedding):
    emb = icosidodecahedron
    for (u, v), i in emb.face_of.items():
        assert (u, v) in emb.faces[i].half_edges()
        assert (v, u) in emb.faces[emb.face_across(u, v)].half_edges()


def test_k5_rotation_is_rejected():
    g = complete_graph(5)
    with pytest.raises(EmbeddingError):
        validate_embedding(PlaneEmbedding(g, g.adjacency))


def test_rotation_must_permute_neighbors():
    g = complete_graph(3)
    with pytest.raises(EmbeddingError):
        PlaneEmbedding(g, ((1,), (0, 2), (0, 1)))


def test_without_hub_leaves_the_rim():
    sub, labels = wheel(5).without([0])
    assert labels == (1, 2, 3, 4, 5)
    assert sub.graph.m == 5
    assert sorted(f.length for f in sub.faces) == [5, 5]


def test_medial_of_dodecahedron(dodecahedron):
    medial, edges = medial_embedding(dodecahedron)
    g = medial.graph
    assert g.n == 30 == len(edges)
    assert all(g.degree(v) == 4 for v in range(g.n))
    assert sorted(f.length for f in medial.faces) == [3] * 20 + [5] * 12


def test_embedding_file_round_trip(tmp_path, icosidodecahedron):
    path = tmp_path / "ico.json"
    write_embedding(icosidodecahedron, path)
    assert read_embedding(path) == icosidodecahedron


def test_embedding_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "rotation": [[1]]}', encoding="utf-8")
    with pytest.raises(EmbeddingError):
        read_embedding(bad)
    bad.write_text('{"n": "two"}', encoding="utf-8")
    with pytest.raises(EmbeddingError):
        read_embedding(bad)
