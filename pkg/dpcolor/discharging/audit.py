"""Final-charge audit: every negative element must take part in a reducible configuration.

A vertex is witnessed when it has degree at most 3 or lies in the vertex set of a
SourceConfig. A face is witnessed through a witnessed boundary vertex; the faces
of a SourceConfig are covered this way since S contains their boundaries.
"""
from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from typing import Callable

from dpcolor.discharging.classify import FaceClass
from dpcolor.discharging.rules import ChargeLedger
from dpcolor.models import AuditItem, AuditReport
from dpcolor.reducer.configs import source_configs

logger = logging.getLogger(__name__)


def vertex_case(degree: int) -> str:
    if degree <= 3:
        return "3-"
    return f"Case {min(degree, 8) - 3}"


def face_case(fc: FaceClass, degree_of: Callable[[int], int]) -> str:
    if fc.length != 5:
        return fc.kind
    big = sum(degree_of(v) >= 5 for v in fc.face.boundary)
    return f"5-face Case {min(big, 2) + 1}"


def reducible_witnesses(ledger: ChargeLedger) -> dict[int, str]:
    """Witness description for every vertex of a reducible configuration."""
    emb = ledger.classification.embedding
    g = emb.graph
    core: dict[int, str] = {}
    for cfg in source_configs(emb):
        for v in sorted(cfg.vertices):
            core.setdefault(v, f"in {cfg.describe()}")
    for v in range(g.n):
        if g.degree(v) <= 3:
            core[v] = f"degree {g.degree(v)}"
    return core


def audit_claims(ledger: ChargeLedger) -> AuditReport:
    c = ledger.classification
    g = c.embedding.graph
    witnesses = reducible_witnesses(ledger)
    cases: Counter[str] = Counter()
    negatives: list[AuditItem] = []
    unwitnessed: list[AuditItem] = []

    def check(element: str, final: Fraction, case: str, witness: str | None) -> None:
        cases[case] += 1
        if final >= 0:
            return
        item = AuditItem(element=element, final=str(final), case=case, witness=witness)
        negatives.append(item)
        if witness is None:
            logger.warning("unwitnessed negative charge %s on %s (%s)", final, element, case)
            unwitnessed.append(item)

    for v in range(g.n):
        check(f"v{v}", ledger.vertex_final[v], vertex_case(g.degree(v)), witnesses.get(v))
    for fc in c.faces:
        witness = next(
            (f"boundary v{v}: {witnesses[v]}" for v in fc.face.boundary if v in witnesses),
            None,
        )
        check(f"f{fc.index}", ledger.face_final[fc.index], face_case(fc, g.degree), witness)
    return AuditReport(
        elements=g.n + len(c.faces),
        negatives=negatives,
        unwitnessed=unwitnessed,
        cases=dict(sorted(cases.items())),
    )
