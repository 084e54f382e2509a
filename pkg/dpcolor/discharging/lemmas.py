"""Structural checks on 5+-vertices of class members.

- triangle bound: at most floor(d/2) incident 3-faces;
- special-face bound: with t incident 3-faces and 2t < d, at most t - 1 special
  5-faces (none when t = 0);
- sink exclusion: a 5+-vertex on a special or bad 5-face f1 and on a 3-face f2
  adjacent to f1 has no sink sharing an edge with f2;
- bad pairing: two bad 5-faces never share exactly one edge vv1 at their common
  5+-vertex v.

The sink exclusion relies on degree-4 sources being reducible; a violation is
excused when the offending sink has a degree-4 source.
"""
from __future__ import annotations

from itertools import combinations

from dpcolor.discharging.classify import Classification, FiveType, classify_faces
from dpcolor.errors import ClassViolationError
from dpcolor.graph.cycles import check_class_membership
from dpcolor.graph.embedding import PlaneEmbedding
from dpcolor.models import LemmaReport, LemmaViolation


def _triangle_bounds(c: Classification, v: int) -> list[LemmaViolation]:
    d = c.embedding.graph.degree(v)
    at = c.faces_at(v)
    t = sum(f.length == 3 for f in at)
    out = []
    if t > d // 2:
        out.append(
            LemmaViolation(
                lemma="triangle-bound",
                vertex=v,
                detail=f"{t} incident 3-faces > floor({d}/2)",
                faces=sorted({f.index for f in at if f.length == 3}),
            )
        )
    specials = [f.index for f in at if f.subtype is FiveType.SPECIAL]
    if 2 * t < d and len(specials) > max(t - 1, 0):
        out.append(
            LemmaViolation(
                lemma="special-face-bound",
                vertex=v,
                detail=f"{len(specials)} special 5-faces with {t} 3-faces and degree {d}",
                faces=sorted(specials),
            )
        )
    return out


def _sink_exclusion(c: Classification, v: int) -> list[LemmaViolation]:
    g = c.embedding.graph
    at = c.faces_at(v)
    heavy = [f.index for f in at if f.subtype in (FiveType.SPECIAL, FiveType.BAD)]
    triangles = sorted({f.index for f in at if f.length == 3})
    out = []
    for f2 in triangles:
        f1 = next((i for i in heavy if c.shared_edges(i, f2) >= 1), None)
        if f1 is None:
            continue
        for r in c.sinks_of(v):
            if c.shared_edges(r.sink, f2) == 0:
                continue
            low = [s for s in c.sources_of(r.sink) if g.degree(s) == 4]
            out.append(
                LemmaViolation(
                    lemma="sink-exclusion",
                    vertex=v,
                    detail=f"sink f{r.sink} shares an edge with 3-face f{f2}, which touches f{f1}",
                    faces=[f1, f2, r.sink],
                    excused_by=f"degree-4 source v{low[0]} of f{r.sink}" if low else None,
                )
            )
    return out


def _bad_pairing(c: Classification, v: int) -> list[LemmaViolation]:
    bad = sorted({f.index for f in c.faces_at(v) if f.subtype is FiveType.BAD and f.big_vertex == v})
    out = []
    for i, j in combinations(bad, 2):
        common = c.faces[i].face.edges & c.faces[j].face.edges
        if len(common) == 1 and v in next(iter(common)):
            out.append(
                LemmaViolation(
                    lemma="bad-pairing",
                    vertex=v,
                    detail=f"bad 5-faces f{i} and f{j} share exactly the edge {sorted(common)[0]}",
                    faces=[i, j],
                )
            )
    return out


def check_structural_lemmas(emb: PlaneEmbedding, classification: Classification | None = None) -> LemmaReport:
    violation = check_class_membership(emb.graph)
    if violation is not None:
        raise ClassViolationError(violation)
    c = classify_faces(emb) if classification is None else classification
    g = emb.graph
    checked = 0
    violations: list[LemmaViolation] = []
    for v in range(g.n):
        if g.degree(v) < 5:
            continue
        checked += 1
        violations += _triangle_bounds(c, v)
        violations += _sink_exclusion(c, v)
        violations += _bad_pairing(c, v)
    return LemmaReport(checked_vertices=checked, violations=violations)
