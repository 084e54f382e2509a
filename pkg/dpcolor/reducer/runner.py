"""DP-4-coloring of class members: find a reducible configuration, delete it, recurse, extend.

Each connected component is handled on its own. Components with at most
`base_case_size` vertices are solved exactly. Every step is written to a
ColoringTrace that travels into reports and certificate bundles.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from dpcolor.config import get_settings
from dpcolor.cover.assignment import ListAssignment, MatchingAssignment
from dpcolor.cover.cover import CoverGraph, Infeasible, SolveResult, Transversal, build_cover, verify_transversal
from dpcolor.cover.solver import TransversalSolver, solve_transversal
from dpcolor.errors import BudgetExceeded, ClassViolationError, ExtensionError, NoReducibleConfiguration, PreconditionError
from dpcolor.graph.core import Graph, connected_components
from dpcolor.graph.cycles import check_class_membership
from dpcolor.graph.embedding import PlaneEmbedding, embedding_to_model
from dpcolor.reducer.configs import LowDegreeVertex, find_reducible
from dpcolor.reducer.extend import extend_low_degree, extend_source_config

logger = logging.getLogger(__name__)


@dataclass
class ColoringTrace:
    steps: list[str] = field(default_factory=list)
    low_degree: int = 0
    source_configs: int = 0
    base_cases: int = 0
    nodes: int = 0

    def add(self, step: str) -> None:
        logger.debug(step)
        self.steps.append(step)


class _Reducer:
    def __init__(self, cover: CoverGraph, base_case_size: int, budget: int | None, trace: ColoringTrace):
        self.cover = cover
        self.base_case_size = base_case_size
        self.budget = budget
        self.trace = trace
        self.partial: dict[int, int] = {}

    def color(self, emb: PlaneEmbedding, labels: tuple[int, ...], depth: int = 0) -> None:
        n = emb.graph.n
        if n == 0:
            return
        comps = connected_components(emb.graph)
        if len(comps) > 1:
            self.trace.add(f"{'  ' * depth}split {n} vertices into {len(comps)} components")
            for comp in comps:
                keep = set(comp)
                sub, sub_labels = emb.without(v for v in range(n) if v not in keep)
                self.color(sub, tuple(labels[i] for i in sub_labels), depth)
            return
        if n <= self.base_case_size:
            self._base_case(labels, depth)
            return

        cfg = find_reducible(emb)
        if cfg is None:
            raise NoReducibleConfiguration(
                f"no reducible configuration on a {n}-vertex class member",
                certificate=embedding_to_model(emb),
            )
        self.trace.add(f"{'  ' * depth}found {cfg.lifted(labels).describe()}")
        sub, sub_labels = emb.without(cfg.vertices)
        self.color(sub, tuple(labels[i] for i in sub_labels), depth + 1)
        lifted = cfg.lifted(labels)
        if isinstance(lifted, LowDegreeVertex):
            self.partial = extend_low_degree(self.cover, self.partial, lifted)
            self.trace.low_degree += 1
        else:
            self.partial = extend_source_config(self.cover, self.partial, lifted)
            self.trace.source_configs += 1
        self.trace.add(f"{'  ' * depth}extended over {sorted(lifted.vertices)}")

    def _base_case(self, labels: tuple[int, ...], depth: int) -> None:
        sub, sub_labels = self.cover.restricted(labels)
        remaining = None if self.budget is None else self.budget - self.trace.nodes
        solver = TransversalSolver(sub, remaining)
        try:
            result = solver.solve()
        except BudgetExceeded:
            raise BudgetExceeded(self.budget, self.trace.nodes + solver.nodes) from None
        self.trace.nodes += solver.nodes
        self.trace.base_cases += 1
        if isinstance(result, Infeasible):
            raise ExtensionError(f"base case on {list(labels)} has no transversal ({result.nodes} nodes)")
        self.trace.add(f"{'  ' * depth}base case {list(labels)} solved in {solver.nodes} nodes")
        self.partial.update(result.lifted(sub_labels).choice)


def color_class_graph_traced(
    emb: PlaneEmbedding,
    lists: ListAssignment,
    matching: MatchingAssignment,
    base_case_size: int | None = None,
    budget: int | None = None,
) -> tuple[Transversal, ColoringTrace]:
    g = emb.graph
    violation = check_class_membership(g)
    if violation is not None:
        raise ClassViolationError(violation)
    cover = build_cover(g, lists, matching)
    if not lists.is_k_assignment(4):
        raise PreconditionError(f"class coloring needs 4-lists; smallest list has {lists.min_size()} colors")
    settings = get_settings()
    base = settings.base_case_size if base_case_size is None else base_case_size
    trace = ColoringTrace()
    trace.add(f"coloring n={g.n} m={g.m} with base case size {base}")
    reducer = _Reducer(cover, base, budget, trace)
    reducer.color(emb, tuple(range(g.n)))
    t = Transversal(reducer.partial)
    verify_transversal(cover, t)
    trace.add("verified transversal against the full cover")
    return t, trace


def color_class_graph(
    emb: PlaneEmbedding,
    lists: ListAssignment,
    matching: MatchingAssignment,
    base_case_size: int | None = None,
    budget: int | None = None,
) -> Transversal:
    """A verified transversal for any 4-list assignment on a class member."""
    return color_class_graph_traced(emb, lists, matching, base_case_size, budget)[0]


def color_any_graph(
    g: Graph, lists: ListAssignment, matching: MatchingAssignment, budget: int | None = None
) -> SolveResult:
    """Exhaustive fallback for graphs outside the class; may be infeasible."""
    cover = build_cover(g, lists, matching)
    result = solve_transversal(cover, budget)
    if isinstance(result, Transversal):
        verify_transversal(cover, result)
    return result
