"""Certificate bundles: self-contained failure records that replay without the harness."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from dpcolor.cover.assignment import (
    ListAssignment,
    MatchingAssignment,
    assignment_from_dump,
    assignment_to_dump,
)
from dpcolor.discharging.audit import audit_claims
from dpcolor.discharging.lemmas import check_structural_lemmas
from dpcolor.discharging.rules import discharge
from dpcolor.errors import DpColorError, InputError
from dpcolor.graph.embedding import PlaneEmbedding, embedding_from_model, embedding_to_model
from dpcolor.harness.generate import generate_class_member
from dpcolor.models import CertificateBundle, ReplayReport
from dpcolor.reducer.runner import color_class_graph_traced

logger = logging.getLogger(__name__)


def make_bundle(
    kind: str,
    trial: int,
    seed: int,
    message: str,
    emb: PlaneEmbedding | None = None,
    lists: ListAssignment | None = None,
    matching: MatchingAssignment | None = None,
    trace: Sequence[str] = (),
    n: int | None = None,
) -> CertificateBundle:
    return CertificateBundle(
        kind=kind,  # type: ignore[arg-type]
        trial=trial,
        seed=seed,
        n=n,
        embedding=None if emb is None else embedding_to_model(emb),
        assignment=None if lists is None or matching is None else assignment_to_dump(lists, matching),
        message=message,
        trace=list(trace),
    )


def write_bundle(bundle: CertificateBundle, path: str | Path) -> None:
    Path(path).write_text(bundle.model_dump_json(indent=2) + "\n", encoding="utf-8")


def read_bundle(path: str | Path) -> CertificateBundle:
    try:
        return CertificateBundle.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except ValidationError as e:
        raise InputError(f"{path}: invalid certificate bundle: {e.errors()[0]['msg']}") from None


def replay_bundle(bundle: CertificateBundle, budget: int | None = None) -> ReplayReport:
    """Re-run the failed check; `ok` means the failure no longer reproduces."""
    kind = bundle.kind
    if kind == "generator":
        if bundle.n is None:
            raise InputError("generator bundle has no vertex count")
        try:
            emb = generate_class_member(bundle.seed, bundle.n)
        except DpColorError as e:
            return ReplayReport(kind=kind, ok=False, detail=str(e))
        return ReplayReport(kind=kind, ok=True, detail=f"generated n={emb.graph.n} m={emb.graph.m}")

    if bundle.embedding is None:
        raise InputError(f"{kind} bundle carries no embedding")
    emb = embedding_from_model(bundle.embedding)
    if kind == "audit":
        report = audit_claims(discharge(emb))
        return ReplayReport(kind=kind, ok=report.ok, detail=f"{len(report.unwitnessed)} unwitnessed negatives")
    if kind == "lemma":
        lemmas = check_structural_lemmas(emb)
        return ReplayReport(kind=kind, ok=not lemmas.unexcused, detail=f"{len(lemmas.unexcused)} unexcused violations")

    if bundle.assignment is None:
        raise InputError(f"{kind} bundle carries no assignment")
    lists, matching = assignment_from_dump(bundle.assignment)
    try:
        t, trace = color_class_graph_traced(emb, lists, matching, budget=budget)
    except DpColorError as e:
        logger.info("replay of %s bundle (trial %d) reproduces: %s", kind, bundle.trial, e)
        return ReplayReport(kind=kind, ok=False, detail=f"{type(e).__name__}: {e}")
    return ReplayReport(kind=kind, ok=True, detail=f"colored {len(t)} vertices", trace=trace.steps)
