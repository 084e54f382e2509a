"""Shared fixtures: named plane graphs, files on disk, random generators."""
from __future__ import annotations

import random
from pathlib import Path
from typing import Callable

import pytest

from dpcolor.cover.assignment import ListAssignment, MatchingAssignment, write_assignment
from dpcolor.graph.core import Graph
from dpcolor.graph.embedding import PlaneEmbedding, write_embedding
from dpcolor.harness.fixtures import cycle_graph, fixture


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep a developer's DPCOLOR_* environment and .env file out of the tests."""
    import os

    for key in list(os.environ):
        if key.startswith("DPCOLOR_"):
            monkeypatch.delenv(key)
    monkeypatch.setenv("DPCOLOR_ENV_FILE", str(tmp_path / "absent.env"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(2018)


@pytest.fixture
def icosidodecahedron() -> PlaneEmbedding:
    return fixture("icosidodecahedron")


@pytest.fixture
def dodecahedron() -> PlaneEmbedding:
    return fixture("dodecahedron")


@pytest.fixture
def embedding_file(tmp_path: Path) -> Callable[[str], Path]:
    def write(name: str) -> Path:
        path = tmp_path / f"{name}.json"
        write_embedding(fixture(name), path)
        return path

    return write


def twisted_c4() -> tuple[Graph, ListAssignment, MatchingAssignment]:
    """C4 with 2-lists: three straight edges and one crossed edge, no transversal."""
    straight = frozenset({(0, 0), (1, 1)})
    matching = MatchingAssignment(
        {(0, 1): straight, (1, 2): straight, (2, 3): straight, (0, 3): frozenset({(0, 1), (1, 0)})}
    )
    return cycle_graph(4), ListAssignment.uniform(4, 2), matching


@pytest.fixture
def twisted_c4_files(tmp_path: Path) -> tuple[Path, Path]:
    g, lists, matching = twisted_c4()
    graph_path = tmp_path / "c4.txt"
    graph_path.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n", encoding="utf-8")
    assignment_path = tmp_path / "c4.twisted.txt"
    write_assignment(lists, matching, assignment_path)
    return graph_path, assignment_path
