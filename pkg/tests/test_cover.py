"""Assignments, the cover graph, the exact solver and adversarial enumeration."""
from __future__ import annotations

import random
from itertools import product
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.cover.assignment import (
    ListAssignment,
    MatchingAssignment,
    identity_assignment,
    parse_assignment,
    random_full_assignment,
    serialize_assignment,
)
from dpcolor.cover.cover import CoverGraph, Infeasible, Transversal, build_cover, verify_transversal
from dpcolor.cover.hard import find_hard_assignment, search_hard_assignment
from dpcolor.cover.normalize import (
    count_normalized,
    normalize_assignment,
    normalized_assignments,
    spanning_forest,
)
from dpcolor.cover.solver import TransversalSolver, brute_force_transversal, residual_lists, solve_transversal
from dpcolor.errors import AssignmentError, BudgetExceeded, VerificationError
from dpcolor.graph.core import Graph
from dpcolor.harness.fixtures import complete_graph, cycle_graph, fixture

from conftest import twisted_c4


def random_instance(rng: random.Random, max_product: int = 10**5) -> CoverGraph:
    """A random graph with random lists and random (partial) matchings, small enough to brute force."""
    while True:
        n = rng.randint(1, 8)
        sizes = [rng.randint(1, 4) for _ in range(n)]
        if prod(sizes) <= max_product:
            break
    p = rng.random()
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    lists = ListAssignment({v: tuple(sorted(rng.sample(range(5), s))) for v, s in enumerate(sizes)})
    pairs = {}
    for u, v in g.edges():
        k = rng.randint(0, min(len(lists[u]), len(lists[v])))
        pairs[(u, v)] = frozenset(zip(rng.sample(lists[u], k), rng.sample(lists[v], k)))
    return build_cover(g, lists, MatchingAssignment(pairs))


def test_matching_must_be_a_matching():
    with pytest.raises(AssignmentError):
        MatchingAssignment({(0, 1): frozenset({(0, 0), (0, 1)})})


def test_matching_is_read_from_both_sides():
    m = MatchingAssignment({(1, 0): frozenset({(2, 0)})})
    assert m.pairs == {(0, 1): frozenset({(0, 2)})}
    assert m.matched(0, 0, 1) == 2
    assert m.matched(1, 2, 0) == 0
    assert m.matched(0, 1, 1) is None


def test_lists_reject_repeats_and_negatives():
    with pytest.raises(AssignmentError):
        ListAssignment({0: (1, 1)})
    with pytest.raises(AssignmentError):
        ListAssignment({0: (-1,)})


def test_build_cover_validates_inputs():
    g = cycle_graph(4)
    lists = ListAssignment.uniform(4, 2)
    with pytest.raises(AssignmentError):
        build_cover(g, ListAssignment.uniform(3, 2), MatchingAssignment.empty())
    with pytest.raises(AssignmentError):
        build_cover(g, lists, MatchingAssignment({(0, 2): frozenset({(0, 0)})}))
    with pytest.raises(AssignmentError):
        build_cover(g, lists, MatchingAssignment({(0, 1): frozenset({(0, 5)})}))
    with pytest.raises(AssignmentError):
        build_cover(g, ListAssignment({0: (0,), 1: (), 2: (0,), 3: (0,)}), MatchingAssignment.empty())


def test_cover_graph_structure():
    g, lists, matching = twisted_c4()
    cover = build_cover(g, lists, matching)
    assert len(cover.nodes()) == 8
    assert len(list(cover.fiber_edges())) == 4
    assert len(list(cover.cross_edges())) == 8
    assert cover.adjacent((0, 0), (3, 1))
    assert not cover.adjacent((0, 0), (3, 0))
    assert sorted(cover.neighbors((0, 0))) == [(0, 1), (1, 0), (3, 1)]


def test_twisted_c4_has_no_transversal():
    cover = build_cover(*twisted_c4())
    assert isinstance(solve_transversal(cover), Infeasible)
    assert isinstance(brute_force_transversal(cover), Infeasible)


def test_identity_c4_is_two_colorable():
    g = cycle_graph(4)
    lists = ListAssignment.uniform(4, 2)
    cover = build_cover(g, lists, identity_assignment(g, lists))
    t = solve_transversal(cover)
    assert isinstance(t, Transversal)
    verify_transversal(cover, t)


def test_k4_identity_three_lists_is_infeasible():
    g = complete_graph(4)
    lists = ListAssignment.uniform(4, 3)
    result = solve_transversal(build_cover(g, lists, identity_assignment(g, lists)))
    assert isinstance(result, Infeasible)
    assert result.nodes > 0


def test_empty_matchings_always_colorable():
    g = complete_graph(5)
    lists = ListAssignment.uniform(5, 1)
    t = solve_transversal(build_cover(g, lists, MatchingAssignment.empty()))
    assert t == Transversal({v: 0 for v in range(5)})


def test_budget_is_enforced():
    g = complete_graph(4)
    lists = ListAssignment.uniform(4, 3)
    with pytest.raises(BudgetExceeded) as info:
        solve_transversal(build_cover(g, lists, identity_assignment(g, lists)), budget=2)
    assert info.value.budget == 2
    assert info.value.used == 3


def test_solver_counts_nodes():
    g = cycle_graph(5)
    lists = ListAssignment.uniform(5, 3)
    solver = TransversalSolver(build_cover(g, lists, identity_assignment(g, lists)))
    assert isinstance(solver.solve(), Transversal)
    assert solver.nodes >= g.n


def test_verify_transversal_catches_conflicts():
    g, lists, matching = twisted_c4()
    cover = build_cover(g, lists, matching)
    with pytest.raises(VerificationError):
        verify_transversal(cover, Transversal({0: 0, 1: 0, 2: 1, 3: 0}))
    with pytest.raises(VerificationError):
        verify_transversal(cover, Transversal({0: 0, 1: 1}))
    with pytest.raises(VerificationError):
        verify_transversal(cover, Transversal({0: 7, 1: 1, 2: 0, 3: 1}))
    verify_transversal(cover, Transversal({0: 0, 1: 1}), complete=False)


def test_restricted_cover_lifts_back():
    g, lists, matching = twisted_c4()
    cover = build_cover(g, lists, matching)
    sub, labels = cover.restricted([1, 2, 3])
    assert labels == (1, 2, 3)
    t = solve_transversal(sub)
    lifted = t.lifted(labels)
    assert set(lifted.choice) == {1, 2, 3}
    verify_transversal(cover, lifted, complete=False)


def test_residual_lists():
    g, lists, matching = twisted_c4()
    residual = residual_lists(g, lists, matching, {0: 0})
    assert residual.lists == {1: (1,), 2: (0, 1), 3: (0,)}
    with pytest.raises(AssignmentError):
        residual_lists(g, lists, matching, {0: 0, 1: 0})
    with pytest.raises(AssignmentError):
        residual_lists(g, lists, matching, {0: 3})


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_solver_agrees_with_brute_force(r: random.Random):
    cover = random_instance(r, max_product=4096)
    ours = solve_transversal(cover)
    oracle = brute_force_transversal(cover)
    assert isinstance(ours, Transversal) == isinstance(oracle, Transversal)
    if isinstance(ours, Transversal):
        verify_transversal(cover, ours)


@pytest.mark.slow
def test_solver_oracle_on_a_thousand_instances():
    r = random.Random(2018)
    disagreements = []
    for i in range(1000):
        cover = random_instance(r)
        ours = solve_transversal(cover)
        if isinstance(ours, Transversal) != isinstance(brute_force_transversal(cover), Transversal):
            disagreements.append(i)
    assert disagreements == []


def test_assignment_text_format(tmp_path):
    g = cycle_graph(4)
    lists, matching = parse_assignment("uniform 3\nlist 2: 0 1 5\nidentity\nedge 1 0: (0,1) (1,0)\n", g)
    assert lists[2] == (0, 1, 5)
    assert matching.edge_map(0, 1) == {1: 0, 0: 1}
    assert matching.edge_map(1, 2) == {0: 0, 1: 1}
    assert parse_assignment(serialize_assignment(lists, matching), g) == (lists, matching)
    with pytest.raises(AssignmentError):
        parse_assignment("uniform 2\nedge 0 1: (0,1) junk\n", g)
    with pytest.raises(AssignmentError):
        parse_assignment("colors please\n", g)


def test_random_full_assignment_is_full_and_seeded(rng):
    g = fixture("icosidodecahedron").graph
    lists = ListAssignment.uniform(g.n, 4)
    m = random_full_assignment(g, lists, rng)
    assert m.is_full(g, lists)
    assert m == random_full_assignment(g, lists, random.Random(2018))


@pytest.mark.parametrize(
    "g, k, expected",
    [(cycle_graph(4), 2, 2), (cycle_graph(5), 2, 2), (complete_graph(4), 3, 6**3), (complete_graph(3), 2, 2)],
)
def test_count_normalized(g, k, expected):
    lists = ListAssignment.uniform(g.n, k)
    assert count_normalized(g, lists) == expected
    assert sum(1 for _ in normalized_assignments(g, lists)) == expected


def test_count_normalized_with_mixed_sizes():
    g = fixture("theta").graph
    lists = ListAssignment.from_sizes((2, 2, 2, 2, 2, 3))
    assert count_normalized(g, lists) == sum(1 for _ in normalized_assignments(g, lists))


def test_normalized_slices_partition_the_enumeration():
    g = complete_graph(4)
    lists = ListAssignment.uniform(4, 3)
    whole = list(normalized_assignments(g, lists))
    assert list(normalized_assignments(g, lists, 0, 100)) + list(normalized_assignments(g, lists, 100)) == whole


@settings(max_examples=50, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(min_value=2, max_value=3))
def test_normalization_preserves_feasibility(r: random.Random, k: int):
    n = r.randint(2, 7)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if r.random() < 0.5])
    lists = ListAssignment.uniform(n, k)
    m = random_full_assignment(g, lists, r)
    normal = normalize_assignment(g, lists, m)
    assert normal.is_full(g, lists)
    before = solve_transversal(build_cover(g, lists, m))
    after = solve_transversal(build_cover(g, lists, normal))
    assert isinstance(before, Transversal) == isinstance(after, Transversal)
    for p, c in spanning_forest(g):
        assert normal.edge_map(p, c) == {i: i for i in range(k)}


def test_normalize_rejects_non_uniform_lists():
    g = cycle_graph(3)
    lists = ListAssignment.from_sizes((2, 2, 3))
    with pytest.raises(AssignmentError):
        normalize_assignment(g, lists, identity_assignment(g, lists))


def test_hard_assignment_on_c4():
    g = cycle_graph(4)
    lists = ListAssignment.uniform(4, 2)
    witness = find_hard_assignment(g, (2, 2, 2, 2))
    assert witness is not None
    assert isinstance(brute_force_transversal(build_cover(g, lists, witness)), Infeasible)


def test_no_hard_assignment_on_a_tree():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    search = search_hard_assignment(g, ListAssignment.uniform(4, 2))
    assert search.witness is None
    assert search.checked == 1


def test_hard_search_is_independent_of_worker_count():
    g = complete_graph(4)
    lists = ListAssignment.uniform(4, 3)
    sequential = search_hard_assignment(g, lists, workers=1)
    parallel = search_hard_assignment(g, lists, workers=2)
    assert sequential.witness == parallel.witness
    assert sequential.witness is not None


def test_hard_search_budget():
    g = cycle_graph(6)
    with pytest.raises(BudgetExceeded):
        search_hard_assignment(g, ListAssignment.uniform(6, 2), budget=0)


def test_product_grid_matches_brute_force_order():
    g = Graph.from_edges(2, [(0, 1)])
    lists = ListAssignment.uniform(2, 2)
    cover = build_cover(g, lists, identity_assignment(g, lists))
    expected = next(v for v in product((0, 1), repeat=2) if v[0] != v[1])
    assert brute_force_transversal(cover) == Transversal(dict(enumerate(expected)))
