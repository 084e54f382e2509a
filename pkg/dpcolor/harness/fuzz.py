"""Property fuzzing of the class coloring, the discharging audit and the lemma checks.

All randomness flows from `FuzzConfig.seed`: it fixes one seed per trial, and each
trial draws its graph size, graph and matchings from that seed alone.
"""
from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor

from dpcolor.cover.assignment import ListAssignment, random_full_assignment
from dpcolor.discharging.audit import audit_claims
from dpcolor.discharging.classify import classify_faces
from dpcolor.discharging.lemmas import check_structural_lemmas
from dpcolor.discharging.rules import discharge
from dpcolor.errors import (
    BudgetExceeded,
    DpColorError,
    GenerationError,
    NoReducibleConfiguration,
    VerificationError,
)
from dpcolor.harness.certificates import make_bundle
from dpcolor.harness.generate import generate_class_member
from dpcolor.models import FuzzConfig, FuzzReport, TrialResult
from dpcolor.reducer.configs import find_reducible, source_configs
from dpcolor.reducer.runner import color_class_graph_traced

logger = logging.getLogger(__name__)


def trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(trials)]


def _failure_kind(e: DpColorError) -> str:
    if isinstance(e, BudgetExceeded):
        return "budget"
    if isinstance(e, NoReducibleConfiguration):
        return "no-reducible"
    if isinstance(e, VerificationError):
        return "verification"
    return "coloring"


def run_trial(cfg: FuzzConfig, trial: int, seed: int) -> TrialResult:
    rng = random.Random(seed)
    n = rng.randint(cfg.n_min, cfg.n_max)
    result = TrialResult(trial=trial, seed=seed)
    try:
        emb = generate_class_member(seed, n)
    except GenerationError as e:
        result.failures.append(make_bundle("generator", trial, seed, str(e), n=n))
        return result
    g = emb.graph
    result.n, result.m, result.min_degree = g.n, g.m, g.min_degree()
    result.source_configs = sum(1 for _ in source_configs(emb))

    lists = ListAssignment.uniform(g.n, 4)
    for _ in range(cfg.assignments_per_graph):
        matching = random_full_assignment(g, lists, rng)
        result.runs += 1
        try:
            color_class_graph_traced(emb, lists, matching, budget=cfg.budget)
        except DpColorError as e:
            kind = _failure_kind(e)
            result.failures.append(make_bundle(kind, trial, seed, str(e), emb, lists, matching, n=n))
            if kind == "budget":
                break
            continue
        result.colored += 1

    if g.min_degree() >= 4 and find_reducible(emb) is None:
        result.failures.append(
            make_bundle("no-reducible", trial, seed, "no reducible configuration with min degree >= 4", emb, n=n)
        )
    classification = classify_faces(emb)
    audit = audit_claims(discharge(emb, classification))
    result.negative_elements = len(audit.negatives)
    if not audit.ok:
        items = ", ".join(f"{i.element}={i.final}" for i in audit.unwitnessed)
        result.failures.append(make_bundle("audit", trial, seed, f"unwitnessed negative charge: {items}", emb, n=n))
    lemmas = check_structural_lemmas(emb, classification)
    if lemmas.unexcused:
        detail = "; ".join(f"{v.lemma} at v{v.vertex}: {v.detail}" for v in lemmas.unexcused)
        result.failures.append(make_bundle("lemma", trial, seed, detail, emb, n=n))
    logger.info("trial %d: n=%d m=%d colored %d/%d", trial, g.n, g.m, result.colored, result.runs)
    return result


def _run_trial_args(args: tuple[FuzzConfig, int, int]) -> TrialResult:
    return run_trial(*args)


def fuzz_theorem(cfg: FuzzConfig) -> FuzzReport:
    """Run every trial and aggregate in trial order; stops after the first trial that exhausts the budget."""
    seeds = trial_seeds(cfg.seed, cfg.trials)
    jobs = [(cfg, i, s) for i, s in enumerate(seeds)]
    results: list[TrialResult] = []
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_run_trial_args, jobs))
    else:
        for job in jobs:
            r = _run_trial_args(job)
            results.append(r)
            if any(f.kind == "budget" for f in r.failures):
                break

    report = FuzzReport(config=cfg)
    for r in sorted(results, key=lambda r: r.trial):
        report.trials.append(r)
        report.total_runs += r.runs
        report.total_colored += r.colored
        report.min_degree_four_graphs += r.min_degree >= 4
        report.failures.extend(r.failures)
        if any(f.kind == "budget" for f in r.failures):
            break
    return report
