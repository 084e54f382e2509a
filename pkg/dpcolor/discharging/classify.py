"""Face classification for the charge argument.

A 5-face gets exactly one subtype, by precedence Special > Bad > F5 > Small > Other:

- Small: simple, all five boundary vertices of degree 4.
- Special: simple (5+,4,4,4,4)-face whose five neighboring faces across its edges
  are all 3-faces. Its 5+-vertex is a special vertex.
- Bad: simple (5+,4,4,4,4)-face with exactly four neighboring 3-faces, the fifth
  neighbor a 4+-face across an edge at the 5+-vertex.
- F5: neither special nor bad, on a special vertex of degree exactly 5 that lies
  on a bad 5-face f2, and sharing exactly one edge with f2.

Vertex-face incidences are corners and count with multiplicity when a boundary
walk passes a vertex twice.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable

from dpcolor.graph.core import Edge, edge_key
from dpcolor.graph.embedding import Face, PlaneEmbedding


class FiveType(str, Enum):
    SPECIAL = "special"
    BAD = "bad"
    F5 = "f5"
    SMALL = "small"
    OTHER = "other"


@dataclass(frozen=True)
class FaceClass:
    index: int
    face: Face
    subtype: FiveType | None = None
    big_vertex: int | None = None

    @property
    def length(self) -> int:
        return self.face.length

    @property
    def kind(self) -> str:
        d = self.face.length
        if d >= 6:
            return "6+-face"
        return f"{d}-face"

    @property
    def label(self) -> str:
        return self.kind if self.subtype is None else f"{self.kind}:{self.subtype.value}"

    def is_five(self, *types: FiveType) -> bool:
        return self.subtype is not None and (not types or self.subtype in types)


@dataclass(frozen=True)
class SourceSink:
    """`source` is the apex of 3-face `triangle` across `edge` from the small 5-face `sink`."""

    source: int
    sink: int
    triangle: int
    edge: Edge


@dataclass(frozen=True)
class Classification:
    embedding: PlaneEmbedding
    faces: tuple[FaceClass, ...]
    special_vertices: frozenset[int]
    relations: tuple[SourceSink, ...]

    @cached_property
    def corners(self) -> tuple[tuple[int, ...], ...]:
        """Face index at each corner of each vertex, in rotation order."""
        emb = self.embedding
        return tuple(tuple(emb.face_of[(v, u)] for u in emb.rotation[v]) for v in range(emb.graph.n))

    def faces_at(self, v: int) -> list[FaceClass]:
        return [self.faces[i] for i in self.corners[v]]

    def shared_edges(self, i: int, j: int) -> int:
        return len(self.faces[i].face.edges & self.faces[j].face.edges)

    @cached_property
    def _sinks(self) -> dict[int, list[SourceSink]]:
        out: dict[int, list[SourceSink]] = defaultdict(list)
        for r in self.relations:
            out[r.source].append(r)
        return out

    def sinks_of(self, v: int) -> list[SourceSink]:
        return self._sinks.get(v, [])

    def sources_of(self, face_index: int) -> list[int]:
        return sorted({r.source for r in self.relations if r.sink == face_index})

    def is_special_vertex(self, v: int) -> bool:
        return v in self.special_vertices


def _across(emb: PlaneEmbedding, f: Face) -> list[tuple[tuple[int, int], int]]:
    return [((a, b), emb.face_across(a, b)) for a, b in f.half_edges()]


def _five_base_type(emb: PlaneEmbedding, f: Face) -> tuple[FiveType, int | None]:
    g = emb.graph
    if not f.is_simple:
        return FiveType.OTHER, None
    degrees = [g.degree(v) for v in f.boundary]
    if all(d == 4 for d in degrees):
        return FiveType.SMALL, None
    big = [v for v in f.boundary if g.degree(v) >= 5]
    if len(big) != 1 or sum(d == 4 for d in degrees) != 4:
        return FiveType.OTHER, None
    v = big[0]
    across = _across(emb, f)
    faces = emb.faces
    non_triangles = [(h, j) for h, j in across if faces[j].length != 3]
    if not non_triangles:
        return FiveType.SPECIAL, v
    if len(non_triangles) == 1:
        (a, b), j = non_triangles[0]
        if faces[j].length >= 4 and v in (a, b):
            return FiveType.BAD, v
    return FiveType.OTHER, None


def classify_faces(emb: PlaneEmbedding) -> Classification:
    g = emb.graph
    faces = emb.faces
    base: dict[int, tuple[FiveType, int | None]] = {
        i: _five_base_type(emb, f) for i, f in enumerate(faces) if f.length == 5
    }
    special_vertices = frozenset(v for t, v in base.values() if t is FiveType.SPECIAL and v is not None)
    bad = {i for i, (t, _) in base.items() if t is FiveType.BAD}

    bad_at: dict[int, list[int]] = defaultdict(list)
    for i in sorted(bad):
        for v in set(faces[i].boundary):
            bad_at[v].append(i)

    classes: list[FaceClass] = []
    for i, f in enumerate(faces):
        if f.length != 5:
            classes.append(FaceClass(i, f))
            continue
        subtype, big = base[i]
        if subtype in (FiveType.SMALL, FiveType.OTHER) and _in_f5(i, f, g.degree, special_vertices, bad_at, faces):
            subtype, big = FiveType.F5, None
        classes.append(FaceClass(i, f, subtype, big))

    relations: list[SourceSink] = []
    for c in classes:
        if c.subtype is not FiveType.SMALL:
            continue
        for (a, b), j in _across(emb, c.face):
            t = faces[j]
            if t.length != 3 or not t.is_simple:
                continue
            (apex,) = set(t.boundary) - {a, b}
            if apex not in c.face.vertices:
                relations.append(SourceSink(apex, c.index, j, edge_key(a, b)))
    return Classification(emb, tuple(classes), special_vertices, tuple(relations))


def _in_f5(
    i: int,
    f: Face,
    degree: Callable[[int], int],
    special_vertices: frozenset[int],
    bad_at: dict[int, list[int]],
    faces: tuple[Face, ...],
) -> bool:
    # i sits on a special 5-vertex that also lies on a bad face j; i and j share one edge
    for v in set(f.boundary):
        if v not in special_vertices or degree(v) != 5:
            continue
        for j in bad_at.get(v, []):
            if j != i and len(f.edges & faces[j].edges) == 1:
                return True
    return False
