"""Plane embeddings as rotation systems; faces are always traced, never supplied.

Convention: `rotation[v]` lists v's neighbors counterclockwise. Tracing follows
half-edge (u, v) with (v, w) where w is the successor of u in rotation[v]. Each
directed half-edge lies on exactly one traced face.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from pydantic import ValidationError

from dpcolor.errors import EmbeddingError, GraphFormatError
from dpcolor.graph.core import Edge, Graph, connected_components, edge_key
from dpcolor.models import EmbeddingFile


@dataclass(frozen=True)
class Face:
    """Boundary walk [v1 ... vk]; vertices may repeat at cut vertices."""

    boundary: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    def half_edges(self) -> list[tuple[int, int]]:
        k = len(self.boundary)
        return [(self.boundary[i], self.boundary[(i + 1) % k]) for i in range(k)]

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, v in self.half_edges())

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.boundary)

    @property
    def is_simple(self) -> bool:
        return len(set(self.boundary)) == len(self.boundary)


@dataclass(frozen=True)
class PlaneEmbedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rotation) != self.graph.n:
            raise EmbeddingError(f"rotation has {len(self.rotation)} entries for {self.graph.n} vertices")
        for v, rot in enumerate(self.rotation):
            if sorted(rot) != list(self.graph.adjacency[v]):
                raise EmbeddingError(
                    f"rotation at {v} is not a permutation of its neighbors: "
                    f"{list(rot)} vs {list(self.graph.adjacency[v])}"
                )

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]]) -> "PlaneEmbedding":
        n = len(rotation)
        edges: set[Edge] = set()
        for v, rot in enumerate(rotation):
            if len(set(rot)) != len(rot):
                raise EmbeddingError(f"rotation at {v} repeats a neighbor")
            for u in rot:
                if not 0 <= u < n:
                    raise EmbeddingError(f"rotation at {v} names vertex {u} outside 0..{n - 1}")
                if u == v:
                    raise EmbeddingError(f"rotation at {v} contains a loop")
                if v not in rotation[u]:
                    raise EmbeddingError(f"rotation lists {u} around {v} but not {v} around {u}")
                edges.add(edge_key(u, v))
        return cls(Graph.from_edges(n, sorted(edges)), tuple(tuple(r) for r in rotation))

    @cached_property
    def _position(self) -> tuple[dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(rot)} for rot in self.rotation)

    def succ(self, v: int, u: int) -> int:
        """Neighbor after u in the rotation at v."""
        rot = self.rotation[v]
        return rot[(self._position[v][u] + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(self._position[v][u] - 1) % len(rot)]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(faces_from_rotation(self))

    @cached_property
    def face_of(self) -> dict[tuple[int, int], int]:
        """Index into `faces` of the face traced through each half-edge."""
        return {h: i for i, f in enumerate(self.faces) for h in f.half_edges()}

    def face_across(self, u: int, v: int) -> int:
        """The face on the other side of half-edge (u, v)."""
        return self.face_of[(v, u)]

    def without(self, vertices: Iterable[int]) -> tuple["PlaneEmbedding", tuple[int, ...]]:
        """Delete `vertices` and restrict the rotation; returns (sub-embedding, labels)."""
        gone = set(vertices)
        labels = tuple(v for v in range(self.graph.n) if v not in gone)
        index = {v: i for i, v in enumerate(labels)}
        rotation = [[index[u] for u in self.rotation[v] if u in index] for v in labels]
        sub = PlaneEmbedding.from_rotation(rotation)
        validate_embedding(sub)
        return sub, labels


def trace_faces(emb: PlaneEmbedding) -> list[Face]:
    seen: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for u in range(emb.graph.n):
        for v in emb.rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, emb.succ(b, a)
            if (a, b) != (u, v):
                raise EmbeddingError(f"face trace from {u}->{v} did not close")
            faces.append(Face(tuple(walk)))
    return faces


def validate_embedding(emb: PlaneEmbedding, faces: Sequence[Face] | None = None) -> None:
    """Euler check per connected component: |V| - |E| + |F| = 2 for genus 0."""
    faces = trace_faces(emb) if faces is None else faces
    g = emb.graph
    owner: dict[int, int] = {}
    comps = connected_components(g)
    for ci, comp in enumerate(comps):
        for v in comp:
            owner[v] = ci
    face_count = [0] * len(comps)
    for f in faces:
        face_count[owner[f.boundary[0]]] += 1
    for ci, comp in enumerate(comps):
        e = sum(g.degree(v) for v in comp) // 2
        if e == 0:
            continue
        euler = len(comp) - e + face_count[ci]
        if euler != 2:
            raise EmbeddingError(
                f"component containing vertex {comp[0]} traces {face_count[ci]} faces: "
                f"V - E + F = {euler}, genus {(2 - euler) // 2} != 0"
            )


def faces_from_rotation(emb: PlaneEmbedding) -> list[Face]:
    """Trace every face of a valid genus-0 embedding; sum of lengths is 2|E|."""
    faces = trace_faces(emb)
    validate_embedding(emb, faces)
    return faces


def embedding_from_coordinates(g: Graph, coords: Mapping[int, tuple[float, float]] | Sequence[tuple[float, float]]) -> PlaneEmbedding:
    """Rotation of a straight-line drawing: neighbors sorted by angle, counterclockwise."""
    rotation = []
    for v in range(g.n):
        x0, y0 = coords[v]
        rotation.append(
            tuple(sorted(g.adjacency[v], key=lambda u: math.atan2(coords[u][1] - y0, coords[u][0] - x0)))
        )
    emb = PlaneEmbedding(g, tuple(rotation))
    validate_embedding(emb)
    return emb


def medial_embedding(emb: PlaneEmbedding) -> tuple[PlaneEmbedding, tuple[Edge, ...]]:
    """Medial plane graph: one vertex per edge, adjacent when consecutive around a vertex.

    Returns the embedding and the original edge behind each medial vertex.
    """
    g = emb.graph
    if g.min_degree() < 3:
        raise EmbeddingError("medial construction needs minimum degree 3")
    edge_list = tuple(g.edges())
    index = {e: i for i, e in enumerate(edge_list)}
    rotation = []
    for u, v in edge_list:
        rotation.append(
            (
                index[edge_key(v, emb.pred(v, u))],
                index[edge_key(u, emb.succ(u, v))],
                index[edge_key(u, emb.pred(u, v))],
                index[edge_key(v, emb.succ(v, u))],
            )
        )
    medial = PlaneEmbedding.from_rotation(rotation)
    validate_embedding(medial)
    return medial, edge_list


def embedding_to_model(emb: PlaneEmbedding) -> EmbeddingFile:
    return EmbeddingFile(n=emb.graph.n, rotation=[list(r) for r in emb.rotation])


def embedding_from_model(model: EmbeddingFile) -> PlaneEmbedding:
    if len(model.rotation) != model.n:
        raise EmbeddingError(f"n={model.n} but {len(model.rotation)} rotation entries")
    try:
        emb = PlaneEmbedding.from_rotation(model.rotation)
    except GraphFormatError as e:
        raise EmbeddingError(str(e)) from None
    validate_embedding(emb)
    return emb


def read_embedding(path: str | Path) -> PlaneEmbedding:
    text = Path(path).read_text(encoding="utf-8")
    try:
        model = EmbeddingFile.model_validate_json(text)
    except ValidationError as e:
        raise EmbeddingError(f"{path}: invalid embedding file: {e.errors()[0]['msg']}") from None
    return embedding_from_model(model)


def write_embedding(emb: PlaneEmbedding, path: str | Path) -> None:
    Path(path).write_text(embedding_to_model(emb).model_dump_json(indent=2) + "\n", encoding="utf-8")