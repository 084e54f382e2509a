"""The M_L-cover of a graph and transversals (independent sets hitting every fiber once)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from dpcolor.cover.assignment import ListAssignment, MatchingAssignment
from dpcolor.errors import VerificationError
from dpcolor.graph.core import Graph
from dpcolor.models import TransversalReport

Node = tuple[int, int]


@dataclass(frozen=True)
class CoverGraph:
    """Nodes (v, c) for c in L(v); fibers are cliques, cross edges are the matchings."""

    graph: Graph
    lists: ListAssignment
    matching: MatchingAssignment

    def nodes(self) -> list[Node]:
        return [(v, c) for v, cs in self.lists.items() for c in cs]

    def fiber(self, v: int) -> list[Node]:
        return [(v, c) for c in self.lists[v]]

    def fiber_edges(self) -> Iterator[tuple[Node, Node]]:
        for v, cs in self.lists.items():
            for i, a in enumerate(cs):
                for b in cs[i + 1 :]:
                    yield (v, a), (v, b)

    def cross_edges(self) -> Iterator[tuple[Node, Node]]:
        for (u, v), pairs in self.matching.pairs.items():
            for a, b in sorted(pairs):
                yield (u, a), (v, b)

    def adjacent(self, x: Node, y: Node) -> bool:
        (u, a), (v, b) = x, y
        if u == v:
            return a != b
        return self.matching.matched(u, a, v) == b

    def neighbors(self, node: Node) -> list[Node]:
        v, c = node
        out = [(v, d) for d in self.lists[v] if d != c]
        for w in self.graph.adjacency[v]:
            d = self.matching.matched(v, c, w)
            if d is not None:
                out.append((w, d))
        return out

    def restricted(self, vertices: Sequence[int]) -> tuple["CoverGraph", tuple[int, ...]]:
        """Sub-instance on G[vertices] relabeled to 0..k-1; `labels[i]` is the original id."""
        sub, labels = self.graph.induced(vertices)
        return CoverGraph(sub, self.lists.restrict(labels), self.matching.restrict(labels)), labels


def build_cover(g: Graph, lists: ListAssignment, matching: MatchingAssignment) -> CoverGraph:
    lists.validate_for(g)
    matching.validate_for(g, lists)
    return CoverGraph(g, lists, matching)


@dataclass(frozen=True)
class Transversal:
    choice: dict[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "choice", dict(sorted(self.choice.items())))

    def __getitem__(self, v: int) -> int:
        return self.choice[v]

    def __len__(self) -> int:
        return len(self.choice)

    def extended(self, more: Mapping[int, int]) -> "Transversal":
        return Transversal({**self.choice, **more})

    def lifted(self, labels: Sequence[int]) -> "Transversal":
        """Translate local ids of a restricted instance back to original ids."""
        return Transversal({labels[v]: c for v, c in self.choice.items()})

    def nodes(self) -> list[Node]:
        return list(self.choice.items())


@dataclass(frozen=True)
class Infeasible:
    """No transversal exists; `nodes` is the search effort spent proving it."""

    nodes: int = 0


SolveResult = Transversal | Infeasible


def verify_transversal(cover: CoverGraph, t: Transversal, complete: bool = True) -> None:
    """Re-check a claimed transversal against the cover; raises VerificationError."""
    g = cover.graph
    for v, c in t.choice.items():
        if not 0 <= v < g.n:
            raise VerificationError(f"transversal colors vertex {v} outside 0..{g.n - 1}")
        if c not in cover.lists[v]:
            raise VerificationError(f"color {c} of vertex {v} is not in L({v})={list(cover.lists[v])}")
    if complete and len(t.choice) != g.n:
        missing = sorted(set(range(g.n)) - set(t.choice))
        raise VerificationError(f"transversal misses vertices {missing}")
    for u, v in g.edges():
        if u in t.choice and v in t.choice and cover.matching.matched(u, t.choice[u], v) == t.choice[v]:
            raise VerificationError(
                f"chosen nodes ({u},{t.choice[u]}) and ({v},{t.choice[v]}) are matched on edge {u}-{v}"
            )


def transversal_report(result: SolveResult, trace: Sequence[str] = (), nodes: int = 0) -> TransversalReport:
    if isinstance(result, Transversal):
        return TransversalReport(status="colored", coloring=result.choice, nodes=nodes, trace=list(trace))
    return TransversalReport(status="infeasible", nodes=result.nodes, trace=list(trace))
