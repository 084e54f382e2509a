"""Signed graphs and their coloring as a special case of DP-coloring.

An edge uv of sign s forbids f(u) = s * f(v). Signed colors are encoded as
nonnegative ids by position in a sorted palette; the edge then carries the
matching {(id(c), id(s * c))}. Palettes are symmetric: for even k it is
{+-1, ..., +-k/2}, for odd k it also contains 0.

Signed edge-list format: lines `u v s` with s in {1, -1} (also `+1`), an optional
`n m` header line, `#` comments.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping

from dpcolor.cover.assignment import ListAssignment, MatchingAssignment
from dpcolor.errors import AssignmentError, ClassViolationError, GraphFormatError, VerificationError
from dpcolor.graph.core import Edge, Graph, edge_key
from dpcolor.graph.cycles import check_class_membership
from dpcolor.graph.embedding import PlaneEmbedding
from dpcolor.reducer.runner import color_class_graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedGraph:
    graph: Graph
    sigma: dict[Edge, int]

    def __post_init__(self) -> None:
        sigma = {edge_key(u, v): s for (u, v), s in self.sigma.items()}
        if set(sigma) != set(self.graph.edges()):
            raise GraphFormatError("signs must be given on exactly the edges of the graph")
        bad = [e for e, s in sigma.items() if s not in (1, -1)]
        if bad:
            raise GraphFormatError(f"signs must be +1 or -1, got {sigma[bad[0]]} on {bad[0]}")
        object.__setattr__(self, "sigma", dict(sorted(sigma.items())))

    @classmethod
    def all_positive(cls, g: Graph) -> "SignedGraph":
        return cls(g, {e: 1 for e in g.edges()})

    def sign(self, u: int, v: int) -> int:
        return self.sigma[edge_key(u, v)]


def signed_palette(k: int) -> tuple[int, ...]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    half = k // 2
    colors = list(range(-half, 0)) + ([0] if k % 2 else []) + list(range(1, half + 1))
    return tuple(colors)


def signed_lists_to_dp(
    sg: SignedGraph, signed_lists: Mapping[int, Iterable[int]]
) -> tuple[ListAssignment, MatchingAssignment, tuple[int, ...]]:
    """Encode arbitrary signed-integer lists; returns (lists, matching, palette) with ids indexing palette."""
    lists = {v: tuple(sorted(set(cs))) for v, cs in signed_lists.items()}
    if set(lists) != set(range(sg.graph.n)):
        raise AssignmentError("signed lists must cover every vertex")
    palette = tuple(sorted({c for cs in lists.values() for c in cs}))
    index = {c: i for i, c in enumerate(palette)}
    pairs = {}
    for (u, v), s in sg.sigma.items():
        allowed = set(lists[v])
        pairs[(u, v)] = frozenset((index[c], index[s * c]) for c in lists[u] if s * c in allowed)
    encoded = ListAssignment({v: tuple(index[c] for c in cs) for v, cs in lists.items()})
    return encoded, MatchingAssignment(pairs), palette


def signed_to_dp(sg: SignedGraph, k: int) -> tuple[ListAssignment, MatchingAssignment]:
    palette = signed_palette(k)
    lists, matching, _ = signed_lists_to_dp(sg, {v: palette for v in range(sg.graph.n)})
    return lists, matching


def verify_signed_coloring(sg: SignedGraph, coloring: Mapping[int, int]) -> None:
    if set(coloring) != set(range(sg.graph.n)):
        raise VerificationError("signed coloring does not cover every vertex")
    for (u, v), s in sg.sigma.items():
        if coloring[u] == s * coloring[v]:
            raise VerificationError(f"edge {u}-{v} of sign {s:+d} has f({u})={coloring[u]}, f({v})={coloring[v]}")


def signed_choosable_4(
    emb: PlaneEmbedding, sigma: Mapping[Edge, int], signed_lists: Mapping[int, Iterable[int]] | None = None
) -> dict[int, int]:
    """Signed coloring from 4-lists (default: the symmetric 4-palette) on a class member."""
    g = emb.graph
    violation = check_class_membership(g)
    if violation is not None:
        raise ClassViolationError(violation)
    sg = SignedGraph(g, dict(sigma))
    if signed_lists is None:
        signed_lists = {v: signed_palette(4) for v in range(g.n)}
    lists, matching, palette = signed_lists_to_dp(sg, signed_lists)
    t = color_class_graph(emb, lists, matching)
    coloring = {v: palette[c] for v, c in t.choice.items()}
    verify_signed_coloring(sg, coloring)
    logger.debug("signed coloring of %d vertices verified", g.n)
    return coloring


def parse_signed_graph(text: str) -> SignedGraph:
    rows: list[tuple[int, int, int, int]] = []
    header: tuple[int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(values) == 2 and header is None and not rows:
            header = (values[0], values[1])
        elif len(values) == 3:
            rows.append((lineno, *values))
        else:
            raise GraphFormatError(f"line {lineno}: expected 'u v sign', got {line!r}")
    if any(u < 0 or v < 0 for _, u, v, _ in rows):
        raise GraphFormatError("negative vertex id")
    if header is not None:
        n, m = header
        if m != len(rows):
            raise GraphFormatError(f"header announces {m} edges, found {len(rows)}")
    else:
        n = 1 + max((max(u, v) for _, u, v, _ in rows), default=-1)
    g = Graph.from_edges(n, [(u, v) for _, u, v, _ in rows])
    return SignedGraph(g, {(u, v): s for _, u, v, s in rows})


def serialize_signed_graph(sg: SignedGraph) -> str:
    lines = [f"{sg.graph.n} {sg.graph.m}"]
    lines.extend(f"{u} {v} {s}" for (u, v), s in sg.sigma.items())
    return "\n".join(lines) + "\n"
