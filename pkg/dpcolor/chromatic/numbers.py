"""Exact chromatic, list-chromatic and DP-chromatic numbers for desk-scale graphs."""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterator

from dpcolor.chromatic.degeneracy import degeneracy_order
from dpcolor.config import get_settings
from dpcolor.cover.assignment import ListAssignment, assignment_to_dump, identity_assignment
from dpcolor.cover.cover import CoverGraph, Transversal
from dpcolor.cover.hard import search_hard_assignment
from dpcolor.cover.solver import TransversalSolver
from dpcolor.errors import BudgetExceeded, PreconditionError
from dpcolor.graph.core import Graph
from dpcolor.models import ChromaticReport

logger = logging.getLogger(__name__)


class _Meter:
    """Solver nodes spent across many searches against one budget."""

    def __init__(self, budget: int | None):
        self.budget = budget
        self.nodes = 0

    @property
    def remaining(self) -> int | None:
        return None if self.budget is None else self.budget - self.nodes

    def colorable(self, g: Graph, lists: ListAssignment) -> bool:
        solver = TransversalSolver(CoverGraph(g, lists, identity_assignment(g, lists)), self.remaining)
        try:
            result = solver.solve()
        except BudgetExceeded:
            raise BudgetExceeded(self.budget, self.nodes + solver.nodes) from None
        self.nodes += solver.nodes
        return isinstance(result, Transversal)


def chromatic_number(g: Graph, budget: int | None = None) -> int:
    """Smallest k with a proper coloring from {0..k-1}; at most degeneracy + 1."""
    return _chromatic(g, _Meter(budget))


def _chromatic(g: Graph, meter: _Meter) -> int:
    if g.n == 0:
        return 0
    _, d = degeneracy_order(g)
    for k in range(1, d + 1):
        if meter.colorable(g, ListAssignment.uniform(g.n, k)):
            return k
    return d + 1


def dp_chromatic(
    g: Graph,
    kmax: int,
    budget: int | None = None,
    workers: int | None = None,
    graph_id: str = "G",
    with_list: bool = False,
) -> ChromaticReport:
    """Smallest k such that every full assignment over uniform k-lists has a transversal.

    Levels below degeneracy + 1 are decided by normalized adversarial enumeration.
    The witness is a hard assignment at level chi_DP - 1.
    """
    settings = get_settings()
    budget = settings.solver_budget if budget is None else budget
    workers = settings.workers if workers is None else workers
    _, degeneracy = degeneracy_order(g)
    meter = _Meter(budget)
    chi = _chromatic(g, meter)
    chi_list = None
    if with_list:
        _check_list_size(g, settings.list_chromatic_max_vertices)
        chi_list = _list_chromatic(g, kmax, meter, chi)
    if g.n == 0:
        return ChromaticReport(graph_id=graph_id, n=0, m=0, chi=0, chi_list=chi_list, chi_dp=0, degeneracy=0)

    witness = None
    if chi >= 2:
        lower = ListAssignment.uniform(g.n, chi - 1)
        witness = assignment_to_dump(lower, identity_assignment(g, lower))
    checked = 0
    k = max(chi, 1)
    while True:
        if k > kmax:
            raise BudgetExceeded(kmax, k, what="colors (kmax)")
        if k >= degeneracy + 1:
            break
        lists = ListAssignment.uniform(g.n, k)
        search = search_hard_assignment(g, lists, meter.remaining, workers)
        checked += search.checked
        meter.nodes += search.nodes
        logger.debug("k=%d: %d assignments, %d nodes, hard=%s", k, search.checked, search.nodes, search.witness is not None)
        if search.witness is None:
            break
        witness = assignment_to_dump(lists, search.witness)
        k += 1
    return ChromaticReport(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        chi=chi,
        chi_list=chi_list,
        chi_dp=k,
        degeneracy=degeneracy,
        witness=witness,
        assignments_checked=checked,
        nodes=meter.nodes,
    )


def canonical_list_systems(n: int, k: int) -> Iterator[ListAssignment]:
    """k-list systems on n vertices up to renaming colors.

    Colors are numbered by first appearance: vertex v takes j new colors and k - j
    colors already used by vertices 0..v-1. The palette never exceeds k * n.
    """

    def extend(v: int, used: int, lists: list[tuple[int, ...]]) -> Iterator[ListAssignment]:
        if v == n:
            yield ListAssignment.from_sequence(lists)
            return
        for fresh in range(k, -1, -1):
            if k - fresh > used:
                continue
            new = tuple(range(used, used + fresh))
            for old in combinations(range(used), k - fresh):
                lists.append(old + new)
                yield from extend(v + 1, used + fresh, lists)
                lists.pop()

    yield from extend(0, 0, [])


def list_chromatic(g: Graph, kmax: int | None = None, budget: int | None = None, max_vertices: int | None = None) -> int:
    """Smallest k such that every k-list system admits a proper list coloring (tiny graphs only)."""
    settings = get_settings()
    kmax = settings.list_chromatic_max_k if kmax is None else kmax
    budget = settings.solver_budget if budget is None else budget
    max_vertices = settings.list_chromatic_max_vertices if max_vertices is None else max_vertices
    _check_list_size(g, max_vertices)
    meter = _Meter(budget)
    return _list_chromatic(g, kmax, meter, _chromatic(g, meter))


def _check_list_size(g: Graph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise PreconditionError(f"list_chromatic is limited to {max_vertices} vertices, got {g.n}")


def _list_chromatic(g: Graph, kmax: int, meter: _Meter, chi: int) -> int:
    if g.n == 0:
        return 0
    _, degeneracy = degeneracy_order(g)
    k = max(chi, 1)
    while k < degeneracy + 1:
        if k > kmax:
            raise BudgetExceeded(kmax, k, what="colors (kmax)")
        if all(meter.colorable(g, lists) for lists in canonical_list_systems(g.n, k)):
            return k
        k += 1
    return k
