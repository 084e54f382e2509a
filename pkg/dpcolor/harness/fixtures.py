"""Named plane graphs with rotation systems, used by regressions, tests and scripts."""
from __future__ import annotations

import math
from typing import Callable

from dpcolor.errors import InputError
from dpcolor.graph.core import Graph
from dpcolor.graph.embedding import PlaneEmbedding, embedding_from_coordinates, medial_embedding


def _polar(radius: float, degrees: float) -> tuple[float, float]:
    a = math.radians(degrees)
    return (radius * math.cos(a), radius * math.sin(a))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycles need n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle(n: int) -> PlaneEmbedding:
    return PlaneEmbedding(cycle_graph(n), tuple(tuple(sorted(((v - 1) % n, (v + 1) % n))) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def k4() -> PlaneEmbedding:
    """Tetrahedron: vertex 0 inside the triangle 1 2 3."""
    coords = [(0.0, 0.0), _polar(1, 90), _polar(1, 210), _polar(1, 330)]
    return embedding_from_coordinates(complete_graph(4), coords)


def wheel(k: int = 5) -> PlaneEmbedding:
    """Hub 0 joined to the rim cycle 1..k."""
    edges = [(0, i) for i in range(1, k + 1)] + [(i, i % k + 1) for i in range(1, k + 1)]
    coords = [(0.0, 0.0)] + [_polar(1, 90 + 360 * i / k) for i in range(k)]
    return embedding_from_coordinates(Graph.from_edges(k + 1, edges), coords)


def cube() -> PlaneEmbedding:
    """Q3: outer square 0..3, inner square 4..7, spokes i to i+4."""
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, i + 4) for i in range(4)]
    coords = [_polar(2, 45 + 90 * i) for i in range(4)] + [_polar(1, 45 + 90 * i) for i in range(4)]
    return embedding_from_coordinates(Graph.from_edges(8, edges), coords)


def dodecahedron() -> PlaneEmbedding:
    """Outer pentagon a0..a4 (ids 0-4), middle 10-cycle b0..b9 (5-14), inner pentagon c0..c4 (15-19)."""
    a = lambda i: i % 5  # noqa: E731
    b = lambda j: 5 + j % 10  # noqa: E731
    c = lambda i: 15 + i % 5  # noqa: E731
    edges = []
    for i in range(5):
        edges += [(a(i), a(i + 1)), (a(i), b(2 * i)), (b(2 * i + 1), c(i)), (c(i), c(i + 1))]
    edges += [(b(j), b(j + 1)) for j in range(10)]
    coords = [_polar(3, 90 + 72 * i) for i in range(5)]
    coords += [_polar(2, 90 + 36 * j) for j in range(10)]
    coords += [_polar(1, 90 + 72 * i + 36) for i in range(5)]
    return embedding_from_coordinates(Graph.from_edges(20, edges), coords)


def icosidodecahedron() -> PlaneEmbedding:
    """Medial graph of the dodecahedron: 4-regular, faces are 20 triangles and 12 pentagons."""
    return medial_embedding(dodecahedron())[0]


def theta() -> PlaneEmbedding:
    """Theta configuration: z = 0 joined to v1 = 1 and v5 = 5 on the 5-cycle 1..5."""
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (0, 1), (0, 5)]
    ring = [_polar(1, 90 + 72 * i) for i in range(5)]
    mid = ((ring[0][0] + ring[4][0]) / 2, (ring[0][1] + ring[4][1]) / 2)
    coords = [(2 * mid[0], 2 * mid[1])] + ring
    return embedding_from_coordinates(Graph.from_edges(6, edges), coords)


THETA_LIST_SIZES = (2, 2, 2, 2, 2, 3)

FIXTURES: dict[str, Callable[[], PlaneEmbedding]] = {
    "k4": k4,
    "w5": wheel,
    "q3": cube,
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "c8": lambda: cycle(8),
    "dodecahedron": dodecahedron,
    "icosidodecahedron": icosidodecahedron,
    "theta": theta,
}


def fixture(name: str) -> PlaneEmbedding:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise InputError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
