"""Short cycles and the class check: no 4-cycle may share an edge with a 3-cycle."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from dpcolor.graph.core import Edge, Graph, edge_key

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class CycleAdjacency:
    """A witness that g is outside the class."""

    c4: Cycle
    c3: Cycle
    shared_edge: Edge


def canonical_cycle(cycle: Cycle) -> Cycle:
    """Rotate to start at the minimum vertex; orient so the second entry is the smaller neighbor."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if k > 2 and rotated[-1] < rotated[1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return rotated


def cycle_edges(cycle: Cycle) -> list[Edge]:
    k = len(cycle)
    return [edge_key(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def enumerate_short_cycles(g: Graph, max_len: int) -> list[Cycle]:
    """All cycles of length 3..max_len, each once, in canonical form, sorted."""
    if max_len not in (3, 4):
        raise ValueError(f"max_len must be 3 or 4, got {max_len}")
    found: list[Cycle] = []
    # Paths start at their minimum vertex s and only visit larger vertices;
    # requiring path[1] < path[-1] reports each cycle in one orientation.
    for s in range(g.n):
        stack: list[tuple[int, ...]] = [(s, w) for w in g.adjacency[s] if w > s]
        while stack:
            path = stack.pop()
            last = path[-1]
            if len(path) >= 3 and path[1] < last and g.has_edge(last, s):
                found.append(path)
            if len(path) < max_len:
                for w in g.adjacency[last]:
                    if w > s and w not in path:
                        stack.append(path + (w,))
    return sorted(found, key=lambda c: (len(c), c))


def check_class_membership(g: Graph) -> CycleAdjacency | None:
    """First (4-cycle, 3-cycle, shared edge) in canonical order, or None when g is in the class."""
    cycles = enumerate_short_cycles(g, 4)
    triangles_on: dict[Edge, list[Cycle]] = defaultdict(list)
    for c in cycles:
        if len(c) == 3:
            for e in cycle_edges(c):
                triangles_on[e].append(c)
    for c4 in (c for c in cycles if len(c) == 4):
        for e in cycle_edges(c4):
            if triangles_on.get(e):
                return CycleAdjacency(c4=c4, c3=triangles_on[e][0], shared_edge=e)
    return None
