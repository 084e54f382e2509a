"""Exact transversal search.

Backtracking over vertices with forward-checked residual lists, smallest residual
first (ties by id). Before branching, any vertex whose residual list is larger
than its number of active uncolored neighbors is deferred: whatever happens to
those neighbors it keeps a color, so it is colored greedily after the search, in
reverse deferral order.
"""
from __future__ import annotations

import heapq
import logging
from itertools import product
from typing import Iterable, Mapping

from dpcolor.cover.assignment import ListAssignment, MatchingAssignment
from dpcolor.cover.cover import CoverGraph, Infeasible, SolveResult, Transversal
from dpcolor.errors import AssignmentError, BudgetExceeded, ExtensionError
from dpcolor.graph.core import Graph

logger = logging.getLogger(__name__)


class TransversalSolver:
    """One exact search over a cover. Not reusable; `nodes` counts color assignments made."""

    def __init__(self, cover: CoverGraph, budget: int | None = None):
        self.cover = cover
        self.budget = budget
        self.nodes = 0
        g = cover.graph
        self._adj = g.adjacency
        self._residual: dict[int, set[int]] = {v: set(cover.lists[v]) for v in range(g.n)}
        self._active: set[int] = set(range(g.n))
        self._active_degree: list[int] = [g.degree(v) for v in range(g.n)]
        self._choice: dict[int, int] = {}
        self._deferred: list[int] = []

    def solve(self) -> SolveResult:
        if any(not cs for cs in self._residual.values()):
            return Infeasible(self.nodes)
        self._peel(range(self.cover.graph.n))
        if not self._search():
            logger.debug("no transversal after %d nodes", self.nodes)
            return Infeasible(self.nodes)
        self._color_deferred()
        return Transversal(self._choice)

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.budget, self.nodes)

    def _assign(self, v: int, c: int) -> list[tuple[int, int]] | None:
        """Color v with c and prune neighbors; None (with nothing changed) on a wipeout."""
        removed: list[tuple[int, int]] = []
        for w in self._adj[v]:
            if w in self._choice:
                continue
            d = self.cover.matching.matched(v, c, w)
            if d is not None and d in self._residual[w]:
                self._residual[w].discard(d)
                removed.append((w, d))
                if not self._residual[w]:
                    for x, e in removed:
                        self._residual[x].add(e)
                    return None
        self._choice[v] = c
        if v in self._active:
            self._active.discard(v)
            for w in self._adj[v]:
                if w in self._active:
                    self._active_degree[w] -= 1
        return removed

    def _unassign(self, v: int, removed: list[tuple[int, int]], was_active: bool) -> None:
        del self._choice[v]
        for w, d in removed:
            self._residual[w].add(d)
        if was_active:
            for w in self._adj[v]:
                if w in self._active:
                    self._active_degree[w] += 1
            self._active.add(v)

    def _peel(self, candidates: Iterable[int]) -> list[int]:
        heap = [v for v in candidates if v in self._active]
        heapq.heapify(heap)
        peeled: list[int] = []
        while heap:
            v = heapq.heappop(heap)
            if v not in self._active or len(self._residual[v]) <= self._active_degree[v]:
                continue
            self._active.discard(v)
            self._deferred.append(v)
            peeled.append(v)
            for w in self._adj[v]:
                if w in self._active:
                    self._active_degree[w] -= 1
                    heapq.heappush(heap, w)
        return peeled

    def _unpeel(self, peeled: list[int]) -> None:
        for v in reversed(peeled):
            self._deferred.pop()
            for w in self._adj[v]:
                if w in self._active:
                    self._active_degree[w] += 1
            self._active.add(v)

    def _search(self) -> bool:
        if not self._active:
            return True
        v = min(self._active, key=lambda u: (len(self._residual[u]), u))
        for c in sorted(self._residual[v]):
            self._tick()
            removed = self._assign(v, c)
            if removed is None:
                continue
            peeled = self._peel(w for w in self._adj[v] if w in self._active)
            if self._search():
                return True
            self._unpeel(peeled)
            self._unassign(v, removed, was_active=True)
        return False

    def _color_deferred(self) -> None:
        for v in reversed(self._deferred):
            options = sorted(self._residual[v])
            if not options:
                raise ExtensionError(f"deferred vertex {v} has no residual color")
            self._tick()
            if self._assign(v, options[0]) is None:
                raise ExtensionError(f"coloring deferred vertex {v} empties a neighbor's list")


def solve_transversal(cover: CoverGraph, budget: int | None = None) -> SolveResult:
    return TransversalSolver(cover, budget).solve()


def residual_lists(
    g: Graph, lists: ListAssignment, matching: MatchingAssignment, partial: Mapping[int, int]
) -> ListAssignment:
    """L*(v) for every uncolored v: L(v) minus colors matched to colored neighbors' choices."""
    for v, c in partial.items():
        if c not in lists[v]:
            raise AssignmentError(f"partial coloring gives {v} color {c} outside L({v})")
        for w in g.adjacency[v]:
            if w in partial and v < w and matching.matched(v, c, w) == partial[w]:
                raise AssignmentError(f"partial coloring conflicts on edge {v}-{w}")
    out: dict[int, tuple[int, ...]] = {}
    for v in range(g.n):
        if v in partial:
            continue
        blocked = {matching.matched(u, partial[u], v) for u in g.adjacency[v] if u in partial}
        out[v] = tuple(c for c in lists[v] if c not in blocked)
    return ListAssignment(out)


def brute_force_transversal(cover: CoverGraph) -> SolveResult:
    """Enumerate every choice vector in lexicographic order (test oracle)."""
    g = cover.graph
    edges = list(g.edges())
    checked = 0
    for vector in product(*(cover.lists[v] for v in range(g.n))):
        checked += 1
        if all(cover.matching.matched(u, vector[u], v) != vector[v] for u, v in edges):
            return Transversal(dict(enumerate(vector)))
    return Infeasible(checked)
