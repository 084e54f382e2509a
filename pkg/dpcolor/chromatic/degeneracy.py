"""Degeneracy order and the greedy coloring it licenses: chi_DP <= degeneracy + 1."""
from __future__ import annotations

import heapq

from dpcolor.cover.assignment import ListAssignment, MatchingAssignment
from dpcolor.cover.cover import Transversal
from dpcolor.errors import ExtensionError, PreconditionError
from dpcolor.graph.core import Graph


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Repeatedly remove a minimum-degree vertex (smallest id on ties).

    Returns the removal order and the degeneracy (largest degree seen at removal).
    """
    degree = [g.degree(v) for v in range(g.n)]
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    removed: set[int] = set()
    order: list[int] = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != degree[v]:
            continue
        removed.add(v)
        order.append(v)
        k = max(k, d)
        for w in g.adjacency[v]:
            if w not in removed:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))
    return order, k


def degeneracy_coloring(g: Graph, lists: ListAssignment, matching: MatchingAssignment) -> Transversal:
    """Color in reverse degeneracy order; each vertex then has at most k colored neighbors."""
    order, k = degeneracy_order(g)
    lists.validate_for(g)
    short = [v for v, cs in lists.items() if len(cs) < k + 1]
    if short:
        raise PreconditionError(f"degeneracy is {k} but vertices {short} have fewer than {k + 1} colors")
    partial: dict[int, int] = {}
    for v in reversed(order):
        colored = {u: partial[u] for u in g.adjacency[v] if u in partial}
        blocked = {matching.matched(u, c, v) for u, c in colored.items()}
        options = [c for c in lists[v] if c not in blocked]
        if not options:
            raise ExtensionError(f"vertex {v} has no color left with {len(colored)} colored neighbors")
        partial[v] = options[0]
    return Transversal(partial)

