"""dpcolor monolith API.

POST /check-class, /color and /audit run the library in-process on an embedding
posted as JSON. Input and precondition errors map to 422, exhausted budgets to 413.
"""
from __future__ import annotations

import logging

from fastapi import FastAPI, HTTPException

from dpcolor.env_loader import load_env

load_env()
from dpcolor import __version__
from dpcolor.cover.assignment import ListAssignment, assignment_from_dump, identity_assignment
from dpcolor.cover.cover import transversal_report
from dpcolor.discharging.audit import audit_claims
from dpcolor.discharging.rules import discharge
from dpcolor.errors import BudgetExceeded, DpColorError, InputError, PreconditionError
from dpcolor.graph.core import Graph
from dpcolor.graph.cycles import check_class_membership
from dpcolor.graph.embedding import PlaneEmbedding, embedding_from_model
from dpcolor.models import (
    AuditRequest,
    AuditResponse,
    ClassCheckReport,
    ColorRequest,
    EmbeddingFile,
    TransversalReport,
)
from dpcolor.reducer.runner import color_class_graph_traced

logger = logging.getLogger(__name__)

app = FastAPI(title="dpcolor", description="DP-coloring of planar graphs: covers, reducers and discharging audits.", version=__version__)


def _http_error(e: Exception) -> HTTPException:
    if isinstance(e, (InputError, PreconditionError)):
        return HTTPException(status_code=422, detail=str(e))
    if isinstance(e, BudgetExceeded):
        return HTTPException(status_code=413, detail=str(e))
    logger.exception("request failed")
    return HTTPException(status_code=500, detail=str(e))


def _embedding(model: EmbeddingFile) -> PlaneEmbedding:
    return embedding_from_model(model)


def class_report(g: Graph) -> ClassCheckReport:
    v = check_class_membership(g)
    if v is None:
        return ClassCheckReport(ok=True)
    return ClassCheckReport(ok=False, c4=list(v.c4), c3=list(v.c3), shared_edge=v.shared_edge)


def color_request(req: ColorRequest) -> TransversalReport:
    """Shared by POST /color and the in-process CLI path."""
    emb = _embedding(req.embedding)
    if req.assignment is None:
        lists = ListAssignment.uniform(emb.graph.n, 4)
        matching = identity_assignment(emb.graph, lists)
    else:
        lists, matching = assignment_from_dump(req.assignment)
    t, trace = color_class_graph_traced(emb, lists, matching)
    return transversal_report(t, trace.steps, trace.nodes)


def audit_request(req: AuditRequest) -> AuditResponse:
    ledger = discharge(_embedding(req.embedding))
    return AuditResponse(ledger=ledger.to_report(), audit=audit_claims(ledger))


@app.post("/check-class", response_model=ClassCheckReport)
def check_class(model: EmbeddingFile):
    try:
        return class_report(_embedding(model).graph)
    except Exception as e:
        raise _http_error(e)


@app.post("/color", response_model=TransversalReport)
def color(req: ColorRequest):
    try:
        return color_request(req)
    except Exception as e:
        raise _http_error(e)


@app.post("/audit", response_model=AuditResponse)
def audit(req: AuditRequest):
    try:
        result = audit_request(req)
    except DpColorError as e:
        raise _http_error(e)
    if req.strict and not result.audit.ok:
        raise HTTPException(status_code=422, detail=f"{len(result.audit.unwitnessed)} unwitnessed negative elements")
    return result


@app.get("/health")
async def health():
    return {"status": "ok", "service": "dpcolor", "version": __version__}
