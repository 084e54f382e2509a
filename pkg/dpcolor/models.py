"""Pydantic models for dpcolor files, reports, API and CLI I/O."""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class EmbeddingFile(BaseModel):
    """Embedding file: `rotation[v]` lists v's neighbors counterclockwise."""

    n: int = Field(..., ge=0, description="Vertex count; vertices are 0..n-1")
    rotation: list[list[int]] = Field(..., description="Per-vertex ccw neighbor order")


class EdgePairs(BaseModel):
    u: int
    v: int
    pairs: list[tuple[int, int]] = Field(default_factory=list, description="(color of u, color of v)")


class AssignmentDump(BaseModel):
    """Lists and per-edge matchings; edges missing from `edges` carry the empty matching."""

    lists: dict[int, list[int]]
    edges: list[EdgePairs] = Field(default_factory=list)


class TransversalReport(BaseModel):
    status: Literal["colored", "infeasible"]
    coloring: dict[int, int] | None = None
    nodes: int = 0
    trace: list[str] = Field(default_factory=list, description="Steps performed")


class ClassCheckReport(BaseModel):
    ok: bool
    c4: list[int] | None = None
    c3: list[int] | None = None
    shared_edge: tuple[int, int] | None = None


class ChromaticReport(BaseModel):
    graph_id: str
    n: int
    m: int
    chi: int
    chi_list: int | None = None
    chi_dp: int
    degeneracy: int
    witness: AssignmentDump | None = Field(None, description="Hard assignment at level chi_dp - 1")
    assignments_checked: int = 0
    nodes: int = 0

    @model_validator(mode="after")
    def _sandwich(self) -> "ChromaticReport":
        if self.chi_list is not None and not (self.chi <= self.chi_list <= self.chi_dp):
            raise ValueError(f"chi={self.chi} <= chi_list={self.chi_list} <= chi_dp={self.chi_dp} fails")
        if self.chi > self.chi_dp:
            raise ValueError(f"chi={self.chi} > chi_dp={self.chi_dp}")
        if self.n and self.chi_dp > self.degeneracy + 1:
            raise ValueError(f"chi_dp={self.chi_dp} exceeds degeneracy + 1 = {self.degeneracy + 1}")
        return self


class ChargeEntry(BaseModel):
    element: str
    size: int = Field(..., description="Degree of a vertex or length of a face")
    initial: str
    final: str
    label: str | None = None


class TransferEntry(BaseModel):
    rule: str
    source: str
    target: str
    amount: str


class LedgerReport(BaseModel):
    vertices: list[ChargeEntry]
    faces: list[ChargeEntry]
    transfers: list[TransferEntry]
    total_initial: str
    total_final: str
    flags: list[str] = Field(default_factory=list)


class AuditItem(BaseModel):
    element: str
    final: str
    case: str
    witness: str | None = None


class AuditReport(BaseModel):
    elements: int
    negatives: list[AuditItem] = Field(default_factory=list)
    unwitnessed: list[AuditItem] = Field(default_factory=list)
    cases: dict[str, int] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.unwitnessed


class LemmaViolation(BaseModel):
    lemma: str
    vertex: int
    detail: str
    faces: list[int] = Field(default_factory=list)
    excused_by: str | None = None


class LemmaReport(BaseModel):
    checked_vertices: int
    violations: list[LemmaViolation] = Field(default_factory=list)

    @property
    def unexcused(self) -> list[LemmaViolation]:
        return [v for v in self.violations if v.excused_by is None]


class FuzzConfig(BaseModel):
    seed: int = Field(2018, ge=0, lt=2**64)
    n_min: int = Field(3, ge=3)
    n_max: int = Field(40, ge=3)
    trials: int = Field(100, ge=0)
    assignments_per_graph: int = Field(20, ge=0)
    budget: int = Field(10_000_000, ge=0, description="Solver node cap per coloring run")
    workers: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _range(self) -> "FuzzConfig":
        if self.n_max < self.n_min:
            raise ValueError(f"n_max={self.n_max} < n_min={self.n_min}")
        return self


class CertificateBundle(BaseModel):
    """Self-contained failure: replays with `dpcolor replay` without the harness."""

    kind: Literal["coloring", "verification", "no-reducible", "audit", "lemma", "budget", "generator"]
    trial: int
    seed: int
    n: int | None = Field(None, description="Requested vertex count (generator failures)")
    embedding: EmbeddingFile | None = None
    assignment: AssignmentDump | None = None
    message: str
    trace: list[str] = Field(default_factory=list)


class ReplayReport(BaseModel):
    kind: str
    ok: bool
    detail: str
    trace: list[str] = Field(default_factory=list)


class TrialResult(BaseModel):
    trial: int
    seed: int
    n: int = 0
    m: int = 0
    min_degree: int = 0
    runs: int = 0
    colored: int = 0
    source_configs: int = 0
    negative_elements: int = 0
    failures: list[CertificateBundle] = Field(default_factory=list)


class FuzzReport(BaseModel):
    config: FuzzConfig
    trials: list[TrialResult] = Field(default_factory=list)
    total_runs: int = 0
    total_colored: int = 0
    min_degree_four_graphs: int = 0
    failures: list[CertificateBundle] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class RegressionResult(BaseModel):
    name: str
    passed: bool
    expected: str
    actual: str
    diff: str | None = None


class RegressionReport(BaseModel):
    results: list[RegressionResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)


class ColorRequest(BaseModel):
    embedding: EmbeddingFile
    assignment: AssignmentDump | None = Field(None, description="Defaults to uniform 4-lists, identity matchings")


class AuditRequest(BaseModel):
    embedding: EmbeddingFile
    strict: bool = False


class AuditResponse(BaseModel):
    ledger: LedgerReport
    audit: AuditReport
