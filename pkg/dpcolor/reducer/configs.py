"""Reducible configurations and the scan that finds them.

A LowDegreeVertex is any vertex of degree at most 3. A SourceConfig is a small
5-face f = [v1 v2 v3 v4 v5] (simple, every boundary vertex of degree 4) together
with a degree-4 vertex z off f such that [z v1 v2] is a triangular face sharing
the edge v1v2 with f.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from dpcolor.graph.core import Edge
from dpcolor.graph.embedding import Face, PlaneEmbedding


@dataclass(frozen=True)
class LowDegreeVertex:
    w: int
    kind = "low-degree"

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset({self.w})

    def lifted(self, labels: Sequence[int]) -> "LowDegreeVertex":
        return LowDegreeVertex(labels[self.w])

    def describe(self) -> str:
        return f"low-degree vertex {self.w}"


@dataclass(frozen=True)
class SourceConfig:
    """`face` is (v1, ..., v5) in boundary order with v1 < v2 the edge shared with [z v1 v2]."""

    z: int
    face: tuple[int, int, int, int, int]
    kind = "source"

    @property
    def shared_edge(self) -> Edge:
        return (self.face[0], self.face[1])

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset({self.z, *self.face})

    def lifted(self, labels: Sequence[int]) -> "SourceConfig":
        return SourceConfig(labels[self.z], tuple(labels[v] for v in self.face))  # type: ignore[arg-type]

    def describe(self) -> str:
        return f"source {self.z} on small 5-face {list(self.face)} across edge {self.shared_edge}"


ReducibleConfig = LowDegreeVertex | SourceConfig


def is_small_five_face(emb: PlaneEmbedding, f: Face) -> bool:
    g = emb.graph
    return f.length == 5 and f.is_simple and all(g.degree(v) == 4 for v in f.boundary)


def _oriented_face(f: Face, a: int, b: int) -> tuple[int, int, int, int, int]:
    """Boundary of f listed from min(a, b) through max(a, b) and on around the cycle."""
    v1, v2 = min(a, b), max(a, b)
    cyc = list(f.boundary)
    i = cyc.index(v1)
    forward = cyc[i:] + cyc[:i]
    if forward[1] == v2:
        return tuple(forward)  # type: ignore[return-value]
    backward = [forward[0]] + forward[:0:-1]
    return tuple(backward)  # type: ignore[return-value]


def source_configs(emb: PlaneEmbedding) -> Iterator[SourceConfig]:
    """Every SourceConfig of the embedding, in face order."""
    g = emb.graph
    faces = emb.faces
    for f in faces:
        if not is_small_five_face(emb, f):
            continue
        for a, b in f.half_edges():
            t = faces[emb.face_across(a, b)]
            if t.length != 3 or not t.is_simple:
                continue
            (z,) = set(t.boundary) - {a, b}
            if g.degree(z) == 4 and z not in f.vertices:
                yield SourceConfig(z, _oriented_face(f, a, b))


def find_reducible(emb: PlaneEmbedding) -> ReducibleConfig | None:
    """Lowest-id vertex of degree <= 3, else the least SourceConfig by (z, v1, v2), else None."""
    g = emb.graph
    for v in range(g.n):
        if g.degree(v) <= 3:
            return LowDegreeVertex(v)
    return min(source_configs(emb), key=lambda c: (c.z, c.face[0], c.face[1]), default=None)
