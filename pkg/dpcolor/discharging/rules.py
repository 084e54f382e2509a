"""Charges and the discharging rules, in exact rational arithmetic.

Initial charge: 2d(v) - 6 on vertices, d(f) - 6 on faces. Rules (vertex gives, per corner):

    R1   4+-vertex: 1 to each 3-face
    R2   4+-vertex: 1/2 to each 4-face
    R3   4-vertex with at most one 3-face: 1/4 to each 5-face if it has one 3-face
         and a 4-face, else 1/3
    R4.1 special 5+-vertex: 1 to each special 5-face
    R4.2 special 5-vertex: 2/3 to each bad 5-face
    R4.3 special 5-vertex on a special and a bad 5-face: 1/3 to each 5-face that is
         neither special nor bad
    R5   non-special 5-vertex, 6+-vertex: 3/4 to each bad 5-face
    R6   source: 1/5 to its sink, once per witnessing 3-face
    R7   6+-vertex, non-special 5-vertex, special 5-vertex on no bad 5-face: 1/2 to
         each 5-face that is neither special nor bad
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from dpcolor.discharging.classify import Classification, FaceClass, FiveType, classify_faces
from dpcolor.graph.embedding import PlaneEmbedding
from dpcolor.models import ChargeEntry, LedgerReport, TransferEntry

logger = logging.getLogger(__name__)

ONE = Fraction(1)
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
QUARTER = Fraction(1, 4)
FIFTH = Fraction(1, 5)
TWO_THIRDS = Fraction(2, 3)
THREE_QUARTERS = Fraction(3, 4)

_PLAIN = (FiveType.F5, FiveType.SMALL, FiveType.OTHER)


@dataclass(frozen=True)
class Transfer:
    rule: str
    vertex: int
    face: int
    amount: Fraction


@dataclass
class ChargeLedger:
    classification: Classification
    vertex_initial: list[Fraction]
    face_initial: list[Fraction]
    transfers: list[Transfer] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    @cached_property
    def vertex_final(self) -> list[Fraction]:
        out = list(self.vertex_initial)
        for t in self.transfers:
            out[t.vertex] -= t.amount
        return out

    @cached_property
    def face_final(self) -> list[Fraction]:
        out = list(self.face_initial)
        for t in self.transfers:
            out[t.face] += t.amount
        return out

    @property
    def total_initial(self) -> Fraction:
        return sum(self.vertex_initial, Fraction(0)) + sum(self.face_initial, Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.vertex_final, Fraction(0)) + sum(self.face_final, Fraction(0))

    def to_report(self) -> LedgerReport:
        c = self.classification
        g = c.embedding.graph
        return LedgerReport(
            vertices=[
                ChargeEntry(
                    element=f"v{v}",
                    size=g.degree(v),
                    initial=str(self.vertex_initial[v]),
                    final=str(self.vertex_final[v]),
                    label="special" if c.is_special_vertex(v) else None,
                )
                for v in range(g.n)
            ],
            faces=[
                ChargeEntry(
                    element=f"f{fc.index}",
                    size=fc.length,
                    initial=str(self.face_initial[fc.index]),
                    final=str(self.face_final[fc.index]),
                    label=fc.label,
                )
                for fc in c.faces
            ],
            transfers=[
                TransferEntry(rule=t.rule, source=f"v{t.vertex}", target=f"f{t.face}", amount=str(t.amount))
                for t in self.transfers
            ],
            total_initial=str(self.total_initial),
            total_final=str(self.total_final),
            flags=list(self.flags),
        )


def _vertex_rules(c: Classification, v: int) -> list[Transfer]:
    g = c.embedding.graph
    d = g.degree(v)
    at = c.faces_at(v)
    t3 = sum(f.length == 3 for f in at)
    t4 = sum(f.length == 4 for f in at)
    special = c.is_special_vertex(v)
    on_special = any(f.subtype is FiveType.SPECIAL for f in at)
    on_bad = any(f.subtype is FiveType.BAD for f in at)
    out: list[Transfer] = []

    def give(rule: str, f: FaceClass, amount: Fraction) -> None:
        out.append(Transfer(rule, v, f.index, amount))

    for f in at:
        if d >= 4 and f.length == 3:
            give("R1", f, ONE)
        if d >= 4 and f.length == 4:
            give("R2", f, HALF)
        if d == 4 and t3 <= 1 and f.length == 5:
            give("R3", f, QUARTER if t3 == 1 and t4 >= 1 else THIRD)
        if special and f.subtype is FiveType.SPECIAL:
            give("R4.1", f, ONE)
        if special and d == 5 and f.subtype is FiveType.BAD:
            give("R4.2", f, TWO_THIRDS)
        if special and d == 5 and on_special and on_bad and f.subtype in _PLAIN:
            give("R4.3", f, THIRD)
        if ((d == 5 and not special) or d >= 6) and f.subtype is FiveType.BAD:
            give("R5", f, THREE_QUARTERS)
        if (d >= 6 or (d == 5 and not special) or (d == 5 and special and not on_bad)) and f.subtype in _PLAIN:
            give("R7", f, HALF)
    for r in c.sinks_of(v):
        out.append(Transfer("R6", v, r.sink, FIFTH))
    return out


def discharge(emb: PlaneEmbedding, classification: Classification | None = None) -> ChargeLedger:
    c = classify_faces(emb) if classification is None else classification
    g = emb.graph
    ledger = ChargeLedger(
        classification=c,
        vertex_initial=[Fraction(2 * g.degree(v) - 6) for v in range(g.n)],
        face_initial=[Fraction(fc.length - 6) for fc in c.faces],
    )
    for v in range(g.n):
        transfers = _vertex_rules(c, v)
        r43 = {t.face for t in transfers if t.rule == "R4.3"}
        r7 = {t.face for t in transfers if t.rule == "R7"}
        for fi in sorted(r43 & r7):
            ledger.flags.append(f"R4.3 and R7 both fire from v{v} to f{fi}")
        ledger.transfers.extend(transfers)
    for fc in c.faces:
        if not fc.face.is_simple:
            ledger.flags.append(f"f{fc.index} boundary walk repeats a vertex; its corners count with multiplicity")
    logger.debug("discharged %d transfers, total %s", len(ledger.transfers), ledger.total_final)
    return ledger
