"""Extending a partial transversal over a deleted reducible configuration.

Partial colorings are dicts keyed by the cover's vertex ids. Residual lists are
taken against every colored neighbor in the cover's graph.
"""
from __future__ import annotations

import logging
from typing import Mapping

from dpcolor.cover.cover import CoverGraph
from dpcolor.errors import ExtensionError, PreconditionError
from dpcolor.reducer.configs import LowDegreeVertex, SourceConfig

logger = logging.getLogger(__name__)


def _residual(cover: CoverGraph, partial: Mapping[int, int], v: int) -> list[int]:
    blocked = {
        cover.matching.matched(u, partial[u], v) for u in cover.graph.adjacency[v] if u in partial
    }
    return [c for c in cover.lists[v] if c not in blocked]


def extend_low_degree(cover: CoverGraph, partial: Mapping[int, int], cfg: LowDegreeVertex) -> dict[int, int]:
    """Color w with the smallest surviving color: at most 3 colored neighbors against 4 colors."""
    w = cfg.w
    colored = [u for u in cover.graph.adjacency[w] if u in partial]
    if len(colored) > 3 or len(cover.lists[w]) < 4:
        raise PreconditionError(
            f"vertex {w} has {len(colored)} colored neighbors and {len(cover.lists[w])} colors; need <= 3 and >= 4"
        )
    options = _residual(cover, partial, w)
    if not options:
        raise ExtensionError(f"no color survives at low-degree vertex {w}")
    return {**partial, w: options[0]}


def extend_source_config(cover: CoverGraph, partial: Mapping[int, int], cfg: SourceConfig) -> dict[int, int]:
    """Color v1 protecting z, then greedily v5, v4, v3, v2, z."""
    v1, v2, v3, v4, v5 = cfg.face
    z = cfg.z
    residual = {v: _residual(cover, partial, v) for v in (z, *cfg.face)}
    need = {v1: 3, v2: 3, v3: 2, v4: 2, v5: 2, z: 2}
    short = {v: len(residual[v]) for v in need if len(residual[v]) < need[v]}
    if short:
        raise PreconditionError(f"{cfg.describe()}: residual lists too short {short}")

    m = cover.matching
    for c in residual[v1]:
        blocker = m.matched(v1, c, z)
        if len([d for d in residual[z] if d != blocker]) >= 2:
            break
    else:
        raise ExtensionError(f"{cfg.describe()}: every color of v1={v1} shrinks L*(z) below 2")

    out = {**partial, v1: c}
    for v in (v5, v4, v3, v2, z):
        options = _residual(cover, out, v)
        if not options:
            raise ExtensionError(f"{cfg.describe()}: greedy step at {v} found no color")
        out[v] = options[0]
    logger.debug("extended %s", cfg.describe())
    return out
