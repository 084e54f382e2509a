"""dpcolor CLI: in-process, or --api-url for a running `dpcolor serve`."""
from __future__ import annotations

import json
import logging
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, List, Optional

import httpx
import typer

from dpcolor.env_loader import load_env
from dpcolor.config import get_settings

load_env()
from dpcolor import __version__
from dpcolor.api.main import class_report, color_request
from dpcolor.chromatic.numbers import dp_chromatic
from dpcolor.cover.assignment import assignment_to_dump, read_assignment
from dpcolor.cover.cover import Infeasible, build_cover, transversal_report
from dpcolor.cover.solver import TransversalSolver
from dpcolor.discharging.audit import audit_claims
from dpcolor.discharging.lemmas import check_structural_lemmas
from dpcolor.discharging.rules import discharge
from dpcolor.errors import BudgetExceeded, DpColorError, InputError, PreconditionError
from dpcolor.graph.core import Graph, parse_graph, serialize_graph
from dpcolor.graph.embedding import embedding_to_model, read_embedding
from dpcolor.harness.certificates import read_bundle, replay_bundle, write_bundle
from dpcolor.harness.fuzz import fuzz_theorem
from dpcolor.harness.regress import run_regressions
from dpcolor.models import ColorRequest, FuzzConfig, TransversalReport

logger = logging.getLogger(__name__)

app = typer.Typer(help="dpcolor: exact DP-coloring, DP-4-coloring of planar class graphs, discharging audits.")

EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


FORMAT = typer.Option(OutputFormat.text, "--format", "-f", help="text or json")
BUDGET = typer.Option(None, "--budget", "-b", help="Solver node cap (default from DPCOLOR_SOLVER_BUDGET)")


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging")):
    level = "DEBUG" if verbose else get_settings().log_level.upper()
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map library errors to exit codes: 2 input/precondition, 3 budget, 1 anything else."""
    try:
        yield
    except (InputError, PreconditionError, OSError) as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(EXIT_INPUT)
    except BudgetExceeded as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(EXIT_BUDGET)
    except DpColorError as e:
        typer.echo(f"error: {type(e).__name__}: {e}", err=True)
        raise typer.Exit(EXIT_NEGATIVE)


def _load_graph(path: Path) -> Graph:
    if path.suffix == ".json":
        return read_embedding(path).graph
    return parse_graph(path.read_text(encoding="utf-8"))


def _budget(budget: int | None) -> int:
    return get_settings().solver_budget if budget is None else budget


def _emit_json(payload: object) -> None:
    if hasattr(payload, "model_dump_json"):
        print(payload.model_dump_json(indent=2))
    else:
        print(json.dumps(payload, indent=2))


@app.command()
def version():
    """Show dpcolor version."""
    typer.echo(__version__)


@app.command()
def parse(path: Path = typer.Argument(..., help="Edge list, DIMACS or embedding JSON"), fmt: OutputFormat = FORMAT):
    """Parse a graph and print its canonical edge list."""
    with _exit_codes():
        g = _load_graph(path)
    if fmt is OutputFormat.json:
        _emit_json({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]})
    else:
        typer.echo(serialize_graph(g), nl=False)


@app.command()
def faces(path: Path = typer.Argument(..., help="Embedding JSON"), fmt: OutputFormat = FORMAT):
    """Trace the faces of a plane embedding."""
    with _exit_codes():
        emb = read_embedding(path)
    if fmt is OutputFormat.json:
        _emit_json({"faces": [list(f.boundary) for f in emb.faces]})
        return
    typer.echo(f"n={emb.graph.n} m={emb.graph.m} faces={len(emb.faces)}")
    for i, f in enumerate(emb.faces):
        typer.echo(f"  f{i} ({f.length}): {' '.join(map(str, f.boundary))}")


@app.command("check-class")
def check_class(path: Path = typer.Argument(..., help="Graph or embedding file"), fmt: OutputFormat = FORMAT):
    """Check that no 4-cycle shares an edge with a 3-cycle. Exit 1 on a violation."""
    with _exit_codes():
        g = _load_graph(path)
        report = class_report(g)
    if fmt is OutputFormat.json:
        _emit_json(report)
    elif report.ok:
        typer.echo("ok")
    else:
        typer.echo(f"violation: 4-cycle {report.c4} and 3-cycle {report.c3} share edge {report.shared_edge}")
    if not report.ok:
        raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def solve(
    path: Path = typer.Argument(..., help="Graph or embedding file"),
    assignment: Path = typer.Option(..., "--assignment", "-a", help="Assignment file (lists and matchings)"),
    budget: Optional[int] = BUDGET,
    fmt: OutputFormat = FORMAT,
):
    """Exact transversal search on the cover. Exit 1 when infeasible."""
    with _exit_codes():
        g = _load_graph(path)
        lists, matching = read_assignment(assignment, g)
        solver = TransversalSolver(build_cover(g, lists, matching), _budget(budget))
        result = solver.solve()
    report = transversal_report(result, nodes=solver.nodes)
    _print_transversal(report, fmt)
    if isinstance(result, Infeasible):
        raise typer.Exit(EXIT_NEGATIVE)


def _print_transversal(report: TransversalReport, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.json:
        _emit_json(report)
        return
    typer.echo(f"{report.status} ({report.nodes} nodes)")
    if report.coloring is not None:
        for v, c in sorted(report.coloring.items()):
            typer.echo(f"  {v}: {c}")
    if report.trace:
        typer.echo("\n--- Trace ---")
        for step in report.trace:
            typer.echo(f"  {step}")


@app.command("chi-dp")
def chi_dp(
    path: Path = typer.Argument(..., help="Graph or embedding file"),
    kmax: int = typer.Option(5, "--kmax", help="Give up above this many colors (exit 3)"),
    with_list: bool = typer.Option(False, "--list", help="Also compute the list chromatic number (tiny graphs)"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Processes for the adversarial search"),
    budget: Optional[int] = BUDGET,
    fmt: OutputFormat = FORMAT,
):
    """Exact chromatic, list chromatic and DP-chromatic numbers."""
    with _exit_codes():
        g = _load_graph(path)
        report = dp_chromatic(g, kmax, _budget(budget), workers, graph_id=path.stem, with_list=with_list)
    if fmt is OutputFormat.json:
        _emit_json(report)
        return
    typer.echo(f"{report.graph_id}: n={report.n} m={report.m} degeneracy={report.degeneracy}")
    typer.echo(f"  chi    = {report.chi}")
    if report.chi_list is not None:
        typer.echo(f"  chi_l  = {report.chi_list}")
    typer.echo(f"  chi_DP = {report.chi_dp}  ({report.assignments_checked} assignments, {report.nodes} nodes)")


@app.command()
def color(
    path: Path = typer.Argument(..., help="Embedding JSON of a class member"),
    assignment: Optional[Path] = typer.Option(None, "--assignment", "-a", help="Default: uniform 4-lists, identity matchings"),
    api_url: Optional[str] = typer.Option(None, "--api-url", help="dpcolor API URL (remote mode)"),
    fmt: OutputFormat = FORMAT,
):
    """DP-4-color a planar graph without 4-cycles adjacent to triangles."""
    api_url = api_url or get_settings().api_url
    with _exit_codes():
        emb = read_embedding(path)
        dump = None
        if assignment is not None:
            dump = assignment_to_dump(*read_assignment(assignment, emb.graph))
        req = ColorRequest(embedding=embedding_to_model(emb), assignment=dump)
        if api_url:
            with httpx.Client(timeout=60.0) as client:
                r = client.post(f"{api_url.rstrip('/')}/color", json=req.model_dump(mode="json"))
                if r.status_code == 422:
                    raise InputError(r.json().get("detail", r.text))
                r.raise_for_status()
                report = TransversalReport.model_validate(r.json())
        else:
            report = color_request(req)
    _print_transversal(report, fmt)


@app.command()
def audit(
    path: Path = typer.Argument(..., help="Embedding JSON"),
    strict: bool = typer.Option(False, "--strict", help="Exit 1 on unwitnessed negatives or lemma violations"),
    fmt: OutputFormat = FORMAT,
):
    """Discharge, audit final charges and check the structural lemmas."""
    with _exit_codes():
        emb = read_embedding(path)
        ledger = discharge(emb)
        report = audit_claims(ledger)
        lemmas = check_structural_lemmas(emb, ledger.classification)
    if fmt is OutputFormat.json:
        _emit_json({
            "ledger": ledger.to_report().model_dump(mode="json"),
            "audit": report.model_dump(mode="json"),
            "lemmas": lemmas.model_dump(mode="json"),
        })
    else:
        typer.echo(f"total charge {ledger.total_initial} -> {ledger.total_final}")
        for flag in ledger.flags:
            typer.echo(f"  flag: {flag}")
        typer.echo(f"{len(report.negatives)} negative, {len(report.unwitnessed)} unwitnessed")
        for item in report.negatives:
            typer.echo(f"  {item.element} = {item.final} [{item.case}] {item.witness or 'UNWITNESSED'}")
        typer.echo(f"lemmas: {lemmas.checked_vertices} vertices checked, {len(lemmas.violations)} violations, {len(lemmas.unexcused)} unexcused")
        for v in lemmas.violations:
            typer.echo(f"  {v.lemma} at v{v.vertex}: {v.detail}" + (f" (excused: {v.excused_by})" if v.excused_by else ""))
    if strict and (not report.ok or lemmas.unexcused):
        raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def fuzz(
    seed: Optional[int] = typer.Option(None, "--seed", "-s"),
    trials: Optional[int] = typer.Option(None, "--trials", "-n"),
    assignments: Optional[int] = typer.Option(None, "--assignments", help="Random assignments per graph"),
    n_min: Optional[int] = typer.Option(None, "--n-min"),
    n_max: Optional[int] = typer.Option(None, "--n-max"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w"),
    budget: Optional[int] = BUDGET,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Directory for certificate bundles"),
    fmt: OutputFormat = FORMAT,
):
    """Fuzz the class coloring, the audit and the lemmas on random class members."""
    s = get_settings()
    with _exit_codes():
        try:
            cfg = FuzzConfig(
                seed=s.fuzz_seed if seed is None else seed,
                trials=s.fuzz_trials if trials is None else trials,
                assignments_per_graph=s.fuzz_assignments_per_graph if assignments is None else assignments,
                n_min=s.fuzz_n_min if n_min is None else n_min,
                n_max=s.fuzz_n_max if n_max is None else n_max,
                workers=s.workers if workers is None else workers,
                budget=_budget(budget),
            )
        except ValueError as e:
            raise InputError(str(e)) from None
        report = fuzz_theorem(cfg)
        if out is not None:
            out.mkdir(parents=True, exist_ok=True)
            for i, bundle in enumerate(report.failures):
                write_bundle(bundle, out / f"trial{bundle.trial:04d}-{i:03d}-{bundle.kind}.json")
    if fmt is OutputFormat.json:
        _emit_json(report)
    else:
        typer.echo(
            f"{len(report.trials)} graphs ({report.min_degree_four_graphs} with min degree 4), "
            f"{report.total_colored}/{report.total_runs} colorings verified, {len(report.failures)} failures"
        )
        for f in report.failures:
            typer.echo(f"  trial {f.trial} seed {f.seed} [{f.kind}] {f.message}")
    if any(f.kind == "budget" for f in report.failures):
        raise typer.Exit(EXIT_BUDGET)
    if not report.ok:
        raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def regress(
    names: Optional[List[str]] = typer.Argument(None, help="Case names (default: all)"),
    fmt: OutputFormat = FORMAT,
):
    """Run the pinned regression suite. Exit 1 if any case fails."""
    with _exit_codes():
        report = run_regressions(names or None)
    if fmt is OutputFormat.json:
        _emit_json(report)
    else:
        for r in report.results:
            typer.echo(f"{'ok  ' if r.passed else 'FAIL'} {r.name}: {r.actual}")
            if r.diff:
                typer.echo(r.diff)
    if not report.ok:
        raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def replay(
    path: Path = typer.Argument(..., help="Certificate bundle JSON"),
    budget: Optional[int] = BUDGET,
    fmt: OutputFormat = FORMAT,
):
    """Re-run a certificate bundle standalone. Exit 1 if the failure reproduces."""
    with _exit_codes():
        report = replay_bundle(read_bundle(path), _budget(budget))
    if fmt is OutputFormat.json:
        _emit_json(report)
    else:
        typer.echo(f"{report.kind}: {'no longer reproduces' if report.ok else 'reproduces'} ({report.detail})")
    if not report.ok:
        raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def serve(
    host: str = typer.Option("127.0.0.1", "--host"),
    port: int = typer.Option(8000, "--port"),
):
    """Run the HTTP API with uvicorn."""
    import uvicorn

    uvicorn.run("dpcolor.api.main:app", host=host, port=port)


if __name__ == "__main__":
    app(prog_name="dpcolor")
