#!/usr/bin/env python3
"""
Write the pinned fixture graphs as files for trying the CLI.

For every named fixture (k4, w5, q3, cycles, dodecahedron, icosidodecahedron,
theta) this writes an embedding JSON and an edge list, plus a few assignment
files: uniform 4-lists with identity and random matchings, the twisted C4 and
the hard theta cover.

Usage:
  PYTHONPATH=. python scripts/create_fixtures.py [--out fixtures] [--seed 2018]
  dpcolor color fixtures/icosidodecahedron.json -a fixtures/icosidodecahedron.random.txt
  dpcolor solve fixtures/theta.json -a fixtures/theta.hard.txt      # exits 1: infeasible
  dpcolor audit fixtures/dodecahedron.json --strict
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

# Project root on path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from dpcolor.env_loader import load_env

load_env()
from dpcolor.cover.assignment import (
    ListAssignment,
    MatchingAssignment,
    identity_assignment,
    random_full_assignment,
    write_assignment,
)
from dpcolor.cover.hard import find_hard_assignment
from dpcolor.graph.core import serialize_graph
from dpcolor.graph.cycles import check_class_membership
from dpcolor.graph.embedding import write_embedding
from dpcolor.harness.fixtures import FIXTURES, THETA_LIST_SIZES, cycle_graph, fixture


def main() -> int:
    parser = argparse.ArgumentParser(description="Write dpcolor fixture files")
    parser.add_argument("--out", type=Path, default=Path("fixtures"), help="Output directory")
    parser.add_argument("--seed", type=int, default=2018, help="Seed for the random matchings")
    args = parser.parse_args()

    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    for name in FIXTURES:
        emb = fixture(name)
        g = emb.graph
        write_embedding(emb, out / f"{name}.json")
        (out / f"{name}.txt").write_text(serialize_graph(g), encoding="utf-8")
        in_class = check_class_membership(g) is None
        lists = ListAssignment.uniform(g.n, 4)
        write_assignment(lists, identity_assignment(g, lists), out / f"{name}.identity.txt")
        write_assignment(lists, random_full_assignment(g, lists, rng), out / f"{name}.random.txt")
        print(f"  {name}: n={g.n} m={g.m} faces={len(emb.faces)} {'class member' if in_class else 'outside the class'}")

    c4 = cycle_graph(4)
    two = ListAssignment.uniform(4, 2)
    straight = frozenset({(0, 0), (1, 1)})
    twisted = MatchingAssignment({(0, 1): straight, (1, 2): straight, (2, 3): straight, (0, 3): frozenset({(0, 1), (1, 0)})})
    write_assignment(two, twisted, out / "c4.twisted.txt")

    theta = fixture("theta").graph
    hard = find_hard_assignment(theta, THETA_LIST_SIZES)
    if hard is None:
        print("No hard cover found for theta.", file=sys.stderr)
        return 1
    write_assignment(ListAssignment.from_sizes(THETA_LIST_SIZES), hard, out / "theta.hard.txt")
    print(f"Wrote fixtures to {out}/ (c4.twisted.txt and theta.hard.txt have no transversal).")
    return 0


if __name__ == "__main__":
    sys.exit(main())
