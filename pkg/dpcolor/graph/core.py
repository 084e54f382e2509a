"""Simple undirected graphs in canonical form, plus the edge-list text format.

Vertices are ids 0..n-1; adjacency is a tuple of ascending neighbor tuples.
Text format (one item per line, blank lines ignored):

    # comment            (also DIMACS "c ..." lines)
    n m                  optional header; recognised when m equals the edge-line count
    u v                  0-based edge
    p edge n m           DIMACS header (then "e u v" lines, 1-based)
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from dpcolor.errors import GraphFormatError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphFormatError(f"adjacency has {len(self.adjacency)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphFormatError(f"neighbors of {v} are not sorted and distinct: {nbrs}")
            for u in nbrs:
                if u == v:
                    raise GraphFormatError(f"loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise GraphFormatError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise GraphFormatError(f"adjacency not symmetric on {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {u} {v} references a vertex outside 0..{n - 1}")
            if v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge {u} {v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        # Sorted rows are short; a linear scan beats bisect for planar degrees.
        return v in self.adjacency[u]

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabeled to 0..k-1; `labels[i]` is the original id of i."""
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(labels), edges), labels


def connected_components(g: Graph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Components (sorted vertex lists, ordered by smallest member) of g restricted to `vertices`."""
    alive = set(range(g.n)) if vertices is None else set(vertices)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _ints(line: str, lineno: int) -> list[int]:
    try:
        values = [int(tok) for tok in line.split()]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {line!r}") from None
    if any(x < 0 for x in values):
        raise GraphFormatError(f"line {lineno}: negative vertex id in {line!r}")
    return values


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c ") or line == "c":
            continue
        out.append((lineno, line))
    return out


def _parse_dimacs(lines: list[tuple[int, str]]) -> Graph:
    header = lines[0][1].split()
    if len(header) != 4 or header[1] not in ("edge", "col"):
        raise GraphFormatError(f"line {lines[0][0]}: malformed DIMACS header {lines[0][1]!r}")
    try:
        n, m = int(header[2]), int(header[3])
    except ValueError:
        raise GraphFormatError(f"line {lines[0][0]}: malformed DIMACS header") from None
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'e u v', got {line!r}")
        u, v = _ints(" ".join(parts[1:]), lineno)
        if u == 0 or v == 0:
            raise GraphFormatError(f"line {lineno}: DIMACS ids are 1-based")
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise GraphFormatError(f"DIMACS header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse edge-list text into a canonical Graph; loops and duplicates are rejected."""
    lines = _content_lines(text)
    if not lines:
        return Graph(0, ())
    if lines[0][1].startswith("p "):
        return _parse_dimacs(lines)

    rows = []
    for lineno, line in lines:
        values = _ints(line, lineno)
        if len(values) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        rows.append((lineno, values[0], values[1]))

    _, a, b = rows[0]
    # a first line "n m" is a header when m counts the remaining lines; n = 0 only heads an empty graph
    if b == len(rows) - 1 and (a > 0 or a == b == 0):
        n = a
        edges = rows[1:]
    else:
        edges = rows
        n = 1 + max((max(u, v) for _, u, v in edges), default=-1)
    return Graph.from_edges(n, [(u, v) for _, u, v in edges])


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
