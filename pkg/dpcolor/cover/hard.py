"""Adversarial search for matching assignments whose cover has no transversal.

Only full matchings are enumerated: adding pairs never makes an infeasible cover
feasible, so a partial hard assignment extends to a full one. The enumeration is
normalized (see `dpcolor.cover.normalize`); the witness is always the first
infeasible assignment in enumeration order, whatever the worker count.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from dpcolor.cover.assignment import ListAssignment, MatchingAssignment
from dpcolor.cover.cover import CoverGraph, Infeasible
from dpcolor.cover.normalize import count_normalized, normalized_assignments
from dpcolor.cover.solver import TransversalSolver
from dpcolor.errors import BudgetExceeded
from dpcolor.graph.core import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HardSearch:
    witness: MatchingAssignment | None
    checked: int
    nodes: int


def _scan(g: Graph, lists: ListAssignment, start: int, stop: int | None, budget: int | None) -> HardSearch:
    checked = 0
    nodes = 0
    for matching in normalized_assignments(g, lists, start, stop):
        checked += 1
        remaining = None if budget is None else budget - nodes
        solver = TransversalSolver(CoverGraph(g, lists, matching), remaining)
        try:
            result = solver.solve()
        except BudgetExceeded:
            raise BudgetExceeded(budget, nodes + solver.nodes) from None
        nodes += solver.nodes
        if isinstance(result, Infeasible):
            return HardSearch(matching, checked, nodes)
    return HardSearch(None, checked, nodes)


def _scan_chunk(args: tuple[Graph, ListAssignment, int, int, int | None]) -> HardSearch:
    g, lists, start, stop, budget = args
    return _scan(g, lists, start, stop, budget)


def search_hard_assignment(
    g: Graph, lists: ListAssignment, budget: int | None = None, workers: int = 1
) -> HardSearch:
    """First normalized full assignment over `lists` with no transversal, with effort counters."""
    total = count_normalized(g, lists)
    logger.debug("hard search: n=%d m=%d, %d normalized assignments", g.n, g.m, total)
    if workers <= 1 or total < 2 * workers:
        return _scan(g, lists, 0, None, budget)

    size = max(1, -(-total // (workers * 4)))
    chunks = [(g, lists, start, min(start + size, total), budget) for start in range(0, total, size)]
    checked = 0
    nodes = 0
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        for part in pool.map(_scan_chunk, chunks):
            checked += part.checked
            nodes += part.nodes
            if budget is not None and nodes > budget:
                raise BudgetExceeded(budget, nodes)
            if part.witness is not None:
                return HardSearch(part.witness, checked, nodes)
    finally:
        pool.shutdown(wait=True, cancel_futures=True)
    return HardSearch(None, checked, nodes)


def find_hard_assignment(
    g: Graph, list_sizes: Sequence[int], budget: int | None = None, workers: int = 1
) -> MatchingAssignment | None:
    """A matching assignment over lists 0..s-1 whose cover has no transversal, or None."""
    return search_hard_assignment(g, ListAssignment.from_sizes(list_sizes), budget, workers).witness
