"""Random class members: stacked triangulation, random edge deletion, then repair.

Vertices are inserted one at a time into a random triangular face. Random
non-bridge edges are then deleted, and while a 4-cycle shares an edge with a
3-cycle that shared edge is deleted. No claim of uniformity over the class.
"""
from __future__ import annotations

import logging
import random

from dpcolor.config import get_settings
from dpcolor.errors import DpColorError, GenerationError, InputError
from dpcolor.graph.cycles import check_class_membership
from dpcolor.graph.embedding import PlaneEmbedding, validate_embedding

logger = logging.getLogger(__name__)


def _insert_after(rot: list[int], u: int, x: int) -> None:
    rot.insert(rot.index(u) + 1, x)


def stacked_triangulation(n: int, rng: random.Random) -> list[list[int]]:
    rot = [[1, 2], [2, 0], [0, 1]]
    for x in range(3, n):
        emb = PlaneEmbedding.from_rotation(rot)
        a, b, c = rng.choice([f.boundary for f in emb.faces])
        # face walk a -> b -> c: x goes between a and c at b, b and a at c, c and b at a
        _insert_after(rot[b], a, x)
        _insert_after(rot[c], b, x)
        _insert_after(rot[a], c, x)
        rot.append([b, a, c])
    return rot


def _delete_edge(rot: list[list[int]], u: int, v: int) -> None:
    rot[u].remove(v)
    rot[v].remove(u)


def _build(n: int, rng: random.Random) -> PlaneEmbedding:
    rot = stacked_triangulation(n, rng)
    emb = PlaneEmbedding.from_rotation(rot)
    deletions = rng.randint(0, (emb.graph.m - n + 1) // 2)
    for _ in range(deletions):
        removable = [(u, v) for u, v in emb.graph.edges() if emb.face_of[(u, v)] != emb.face_of[(v, u)]]
        if not removable:
            break
        _delete_edge(rot, *rng.choice(removable))
        emb = PlaneEmbedding.from_rotation(rot)
    while (violation := check_class_membership(emb.graph)) is not None:
        _delete_edge(rot, *violation.shared_edge)
        emb = PlaneEmbedding.from_rotation(rot)
    validate_embedding(emb)
    return emb


def generate_class_member(seed: int, n: int, attempts: int | None = None) -> PlaneEmbedding:
    """A connected plane class member on n vertices, determined by (seed, n)."""
    if n < 3:
        raise InputError(f"generator needs n >= 3, got {n}")
    attempts = get_settings().generator_attempts if attempts is None else attempts
    for attempt in range(attempts):
        rng = random.Random(f"{seed}:{n}:{attempt}")
        try:
            emb = _build(n, rng)
        except DpColorError as e:
            logger.warning("generator attempt %d for seed=%d n=%d failed: %s", attempt, seed, n, e)
            continue
        if check_class_membership(emb.graph) is None:
            return emb
    raise GenerationError(f"no class member after {attempts} attempts for seed={seed} n={n}; retry with another seed")
