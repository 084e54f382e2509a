"""Pinned regression suite: cycle DP-chromatic numbers, K4, the theta hard cover,
the polyhedral audits and a signed coloring smoke run.

Each case renders its result as a short string and compares it with the pinned
expectation; mismatches carry a unified diff.
"""
from __future__ import annotations

import difflib
import logging
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from dpcolor.chromatic.numbers import dp_chromatic, list_chromatic
from dpcolor.cover.assignment import ListAssignment, MatchingAssignment, identity_assignment
from dpcolor.cover.cover import Infeasible, build_cover
from dpcolor.cover.hard import find_hard_assignment
from dpcolor.cover.solver import brute_force_transversal, solve_transversal
from dpcolor.discharging.audit import audit_claims
from dpcolor.discharging.rules import discharge
from dpcolor.errors import DpColorError, InputError
from dpcolor.graph.cycles import check_class_membership
from dpcolor.harness.fixtures import THETA_LIST_SIZES, cycle_graph, fixture
from dpcolor.models import RegressionReport, RegressionResult
from dpcolor.signed.adapter import signed_choosable_4

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegressionCase:
    name: str
    expected: str
    run: Callable[[], str]


def _status(result: object) -> str:
    return "infeasible" if isinstance(result, Infeasible) else "colored"


def _chi_dp_cycle(n: int) -> Callable[[], str]:
    return lambda: str(dp_chromatic(cycle_graph(n), kmax=4, graph_id=f"C{n}").chi_dp)


def _k4_class() -> str:
    v = check_class_membership(fixture("k4").graph)
    return "in class" if v is None else f"c4={v.c4} c3={v.c3} edge={v.shared_edge}"


def _twisted_c4() -> str:
    g = cycle_graph(4)
    lists = ListAssignment.uniform(4, 2)
    straight = frozenset({(0, 0), (1, 1)})
    twisted = frozenset({(0, 1), (1, 0)})
    matching = MatchingAssignment({(0, 1): straight, (1, 2): straight, (2, 3): straight, (0, 3): twisted})
    return _status(solve_transversal(build_cover(g, lists, matching)))


def _k4_identity() -> str:
    g = fixture("k4").graph
    lists = ListAssignment.uniform(4, 3)
    return _status(solve_transversal(build_cover(g, lists, identity_assignment(g, lists))))


def _theta_hard_cover() -> str:
    g = fixture("theta").graph
    witness = find_hard_assignment(g, THETA_LIST_SIZES)
    if witness is None:
        return "no hard assignment"
    cover = build_cover(g, ListAssignment.from_sizes(THETA_LIST_SIZES), witness)
    return "hard, brute force " + _status(brute_force_transversal(cover))


def _audit(name: str) -> Callable[[], str]:
    def run() -> str:
        ledger = discharge(fixture(name))
        report = audit_claims(ledger)
        return (
            f"total {ledger.total_initial} -> {ledger.total_final}; "
            f"{len(report.negatives)} negative, {len(report.unwitnessed)} unwitnessed"
        )

    return run


def _signed_smoke() -> str:
    rng = random.Random(2018)
    names = ("q3", "dodecahedron", "icosidodecahedron", "theta")
    for name in names:
        emb = fixture(name)
        signed_choosable_4(emb, {e: rng.choice((1, -1)) for e in emb.graph.edges()})
    return f"{len(names)}/{len(names)} verified"


CASES: tuple[RegressionCase, ...] = (
    RegressionCase("chi-dp-C4", "3", _chi_dp_cycle(4)),
    RegressionCase("chi-dp-C6", "3", _chi_dp_cycle(6)),
    RegressionCase("chi-dp-C8", "3", _chi_dp_cycle(8)),
    RegressionCase("chi-list-C4", "2", lambda: str(list_chromatic(cycle_graph(4)))),
    RegressionCase("k4-class", "c4=(0, 1, 2, 3) c3=(0, 1, 2) edge=(0, 1)", _k4_class),
    RegressionCase("k4-chi-dp", "4", lambda: str(dp_chromatic(fixture("k4").graph, kmax=4, graph_id="K4").chi_dp)),
    RegressionCase("c4-twisted", "infeasible", _twisted_c4),
    RegressionCase("k4-identity-3", "infeasible", _k4_identity),
    RegressionCase("theta-hard-cover", "hard, brute force infeasible", _theta_hard_cover),
    RegressionCase("dodecahedron-audit", "total -12 -> -12; 12 negative, 0 unwitnessed", _audit("dodecahedron")),
    RegressionCase("icosidodecahedron-audit", "total -12 -> -12; 30 negative, 0 unwitnessed", _audit("icosidodecahedron")),
    RegressionCase("signed-smoke", "4/4 verified", _signed_smoke),
)


def run_regressions(names: Sequence[str] | None = None, overrides: Mapping[str, str] | None = None) -> RegressionReport:
    """Run the pinned cases (all when `names` is None); `overrides` replaces expectations by name."""
    known = {c.name: c for c in CASES}
    if names is None:
        selected = list(CASES)
    else:
        unknown = [n for n in names if n not in known]
        if unknown:
            raise InputError(f"unknown regression(s) {unknown}; choose from {sorted(known)}")
        selected = [known[n] for n in names]
    overrides = dict(overrides or {})

    report = RegressionReport()
    for case in selected:
        expected = overrides.get(case.name, case.expected)
        try:
            actual = case.run()
        except DpColorError as e:
            actual = f"error: {type(e).__name__}: {e}"
        passed = actual == expected
        diff = None
        if not passed:
            diff = "\n".join(
                difflib.unified_diff([expected], [actual], "expected", "actual", lineterm="")
            )
            logger.warning("regression %s failed: expected %r, got %r", case.name, expected, actual)
        report.results.append(
            RegressionResult(name=case.name, passed=passed, expected=expected, actual=actual, diff=diff)
        )
    return report
