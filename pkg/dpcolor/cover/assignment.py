"""List assignments L and matching assignments M_L (one matching per edge).

Colors are small nonnegative integers local to each vertex's list. A matching on
edge uv is stored once under the key (min, max) as pairs (color of min, color of
max) and queried from either side. Empty matchings are not stored.

Assignment text format:

    # comment
    uniform 4               every vertex gets colors 0..3
    list 0: 1 2 3 4         list of vertex 0 (overrides uniform)
    identity                identity matchings on shared colors of every edge
    edge 0 1: (1,2) (2,1)   matching on edge 0-1: (color of 0, color of 1)
"""
from __future__ import annotations

import random
import re
from pathlib import Path
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from dpcolor.errors import AssignmentError
from dpcolor.graph.core import Edge, Graph, edge_key
from dpcolor.models import AssignmentDump, EdgePairs

Pair = tuple[int, int]


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists. Residual lists may be empty; `validate_for` rejects that."""

    lists: dict[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        normalized: dict[int, tuple[int, ...]] = {}
        for v, colors in sorted(self.lists.items()):
            cs = tuple(sorted(set(colors)))
            if len(cs) != len(tuple(colors)):
                raise AssignmentError(f"list of vertex {v} repeats a color: {list(colors)}")
            if any(c < 0 for c in cs):
                raise AssignmentError(f"list of vertex {v} has a negative color id")
            normalized[int(v)] = cs
        object.__setattr__(self, "lists", normalized)

    @classmethod
    def uniform(cls, n: int, k: int) -> "ListAssignment":
        return cls({v: tuple(range(k)) for v in range(n)})

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "ListAssignment":
        return cls({v: tuple(range(s)) for v, s in enumerate(sizes)})

    @classmethod
    def from_sequence(cls, lists: Sequence[Iterable[int]]) -> "ListAssignment":
        return cls({v: tuple(cs) for v, cs in enumerate(lists)})

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def __contains__(self, v: object) -> bool:
        return v in self.lists

    def __len__(self) -> int:
        return len(self.lists)

    def items(self) -> Iterator[tuple[int, tuple[int, ...]]]:
        return iter(self.lists.items())

    def vertices(self) -> list[int]:
        return list(self.lists)

    def sizes(self) -> dict[int, int]:
        return {v: len(cs) for v, cs in self.lists.items()}

    def min_size(self) -> int:
        return min((len(cs) for cs in self.lists.values()), default=0)

    def is_k_assignment(self, k: int) -> bool:
        return all(len(cs) >= k for cs in self.lists.values())

    def validate_for(self, g: Graph) -> None:
        if set(self.lists) != set(range(g.n)):
            missing = sorted(set(range(g.n)) - set(self.lists))
            extra = sorted(set(self.lists) - set(range(g.n)))
            raise AssignmentError(f"lists do not cover V(G): missing {missing}, extra {extra}")
        for v, cs in self.lists.items():
            if not cs:
                raise AssignmentError(f"vertex {v} has an empty list")

    def restrict(self, labels: Sequence[int]) -> "ListAssignment":
        """Relabel to 0..k-1 where i stands for labels[i]."""
        return ListAssignment({i: self.lists[v] for i, v in enumerate(labels)})


@dataclass(frozen=True)
class MatchingAssignment:
    pairs: dict[Edge, frozenset[Pair]]

    def __post_init__(self) -> None:
        normalized: dict[Edge, frozenset[Pair]] = {}
        for (u, v), pairs in self.pairs.items():
            if u == v:
                raise AssignmentError(f"matching on a loop at {u}")
            oriented = {(a, b) if u < v else (b, a) for a, b in pairs}
            key = edge_key(u, v)
            if key in normalized:
                raise AssignmentError(f"edge {key} given twice")
            left = [a for a, _ in oriented]
            right = [b for _, b in oriented]
            if len(set(left)) != len(left) or len(set(right)) != len(right):
                raise AssignmentError(f"pairs on edge {key} are not a matching: {sorted(oriented)}")
            if oriented:
                normalized[key] = frozenset(oriented)
        object.__setattr__(self, "pairs", dict(sorted(normalized.items())))

    @classmethod
    def empty(cls) -> "MatchingAssignment":
        return cls({})

    @cached_property
    def _forward(self) -> dict[tuple[int, int], dict[int, int]]:
        maps: dict[tuple[int, int], dict[int, int]] = {}
        for (u, v), pairs in self.pairs.items():
            maps[(u, v)] = {a: b for a, b in pairs}
            maps[(v, u)] = {b: a for a, b in pairs}
        return maps

    def matched(self, u: int, c: int, v: int) -> int | None:
        """Color of v matched to (u, c), if any."""
        m = self._forward.get((u, v))
        return None if m is None else m.get(c)

    def edge_map(self, u: int, v: int) -> dict[int, int]:
        """Matching on uv read from u's side: color of u -> color of v."""
        return self._forward.get((u, v), {})

    def edge_pairs(self, u: int, v: int) -> frozenset[Pair]:
        return frozenset(self.edge_map(u, v).items())

    def edges(self) -> list[Edge]:
        return list(self.pairs)

    def size(self) -> int:
        return sum(len(p) for p in self.pairs.values())

    def with_pairs(self, u: int, v: int, pairs: Iterable[Pair]) -> "MatchingAssignment":
        """Copy with the matching on uv replaced; pairs are (color of u, color of v)."""
        updated = {e: p for e, p in self.pairs.items() if e != edge_key(u, v)}
        updated[(u, v)] = frozenset(pairs)
        return MatchingAssignment(updated)

    def restrict(self, labels: Sequence[int]) -> "MatchingAssignment":
        index = {v: i for i, v in enumerate(labels)}
        return MatchingAssignment(
            {
                (index[u], index[v]): pairs
                for (u, v), pairs in self.pairs.items()
                if u in index and v in index
            }
        )

    def relabeled(self, perms: Mapping[int, Mapping[int, int]]) -> "MatchingAssignment":
        """Apply per-vertex fiber relabelings (vertex -> old color -> new color)."""

        def apply(v: int, c: int) -> int:
            p = perms.get(v)
            return c if p is None else p[c]

        return MatchingAssignment(
            {(u, v): frozenset((apply(u, a), apply(v, b)) for a, b in pairs) for (u, v), pairs in self.pairs.items()}
        )

    def validate_for(self, g: Graph, lists: ListAssignment) -> None:
        for (u, v), pairs in self.pairs.items():
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise AssignmentError(f"matching given on {u}-{v}, which is not an edge")
            for a, b in pairs:
                if a not in lists[u] or b not in lists[v]:
                    raise AssignmentError(
                        f"pair ({a},{b}) on edge {u}-{v} uses a color outside L({u})={list(lists[u])} "
                        f"or L({v})={list(lists[v])}"
                    )

    def is_full(self, g: Graph, lists: ListAssignment) -> bool:
        return all(len(self.edge_map(u, v)) == min(len(lists[u]), len(lists[v])) for u, v in g.edges())


def identity_assignment(g: Graph, lists: ListAssignment) -> MatchingAssignment:
    """M_uv = {(c, c) : c in L(u) ∩ L(v)}; transversals are exactly proper L-colorings."""
    return MatchingAssignment(
        {(u, v): frozenset((c, c) for c in set(lists[u]) & set(lists[v])) for u, v in g.edges()}
    )


def random_full_assignment(g: Graph, lists: ListAssignment, rng: random.Random) -> MatchingAssignment:
    """Uniformly random maximum matching on every edge (deterministic for a seeded rng)."""
    pairs: dict[Edge, frozenset[Pair]] = {}
    for u, v in g.edges():
        a, b = lists[u], lists[v]
        if len(a) <= len(b):
            pairs[(u, v)] = frozenset(zip(a, rng.sample(b, len(a))))
        else:
            pairs[(u, v)] = frozenset(zip(rng.sample(a, len(b)), b))
    return MatchingAssignment(pairs)


def random_lists(n: int, k: int, palette: int, rng: random.Random) -> ListAssignment:
    return ListAssignment({v: tuple(sorted(rng.sample(range(palette), k))) for v in range(n)})


def injective_maps(a: Sequence[int], b: Sequence[int]) -> Iterator[frozenset[Pair]]:
    """All maximum matchings between lists a and b, as pair sets (a-color, b-color)."""
    if len(a) <= len(b):
        for image in permutations(b, len(a)):
            yield frozenset(zip(a, image))
    else:
        for image in permutations(a, len(b)):
            yield frozenset(zip(image, b))


# -- files ---------------------------------------------------------------------------

_LIST_RE = re.compile(r"^list\s+(\d+)\s*:\s*(.*)$")
_EDGE_RE = re.compile(r"^edge\s+(\d+)\s+(\d+)\s*:\s*(.*)$")
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_assignment(text: str, g: Graph) -> tuple[ListAssignment, MatchingAssignment]:
    uniform: int | None = None
    explicit: dict[int, tuple[int, ...]] = {}
    identity = False
    pairs: dict[Edge, frozenset[Pair]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("uniform"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise AssignmentError(f"line {lineno}: expected 'uniform K', got {line!r}")
            uniform = int(parts[1])
        elif line == "identity":
            identity = True
        elif m := _LIST_RE.match(line):
            v = int(m.group(1))
            try:
                explicit[v] = tuple(int(tok) for tok in m.group(2).split())
            except ValueError:
                raise AssignmentError(f"line {lineno}: malformed color list {line!r}") from None
        elif m := _EDGE_RE.match(line):
            u, v = int(m.group(1)), int(m.group(2))
            body = m.group(3)
            found = [(int(a), int(b)) for a, b in _PAIR_RE.findall(body)]
            if _PAIR_RE.sub("", body).strip():
                raise AssignmentError(f"line {lineno}: malformed pairs {body!r}")
            key = edge_key(u, v)
            if key in pairs:
                raise AssignmentError(f"line {lineno}: edge {u} {v} given twice")
            pairs[key] = frozenset(found if u < v else [(b, a) for a, b in found])
        else:
            raise AssignmentError(f"line {lineno}: unrecognized line {line!r}")

    lists_map: dict[int, tuple[int, ...]] = {}
    if uniform is not None:
        lists_map = {v: tuple(range(uniform)) for v in range(g.n)}
    lists_map.update(explicit)
    lists = ListAssignment(lists_map)
    lists.validate_for(g)
    if identity:
        base = dict(identity_assignment(g, lists).pairs)
        base.update(pairs)
        pairs = base
    matching = MatchingAssignment(pairs)
    matching.validate_for(g, lists)
    return lists, matching


def serialize_assignment(lists: ListAssignment, matching: MatchingAssignment) -> str:
    lines = [f"list {v}: {' '.join(map(str, cs))}" for v, cs in lists.items()]
    for (u, v), pairs in matching.pairs.items():
        lines.append(f"edge {u} {v}: " + " ".join(f"({a},{b})" for a, b in sorted(pairs)))
    return "\n".join(lines) + "\n"


def assignment_to_dump(lists: ListAssignment, matching: MatchingAssignment) -> AssignmentDump:
    return AssignmentDump(
        lists={v: list(cs) for v, cs in lists.items()},
        edges=[EdgePairs(u=u, v=v, pairs=sorted(p)) for (u, v), p in matching.pairs.items()],
    )


def assignment_from_dump(dump: AssignmentDump) -> tuple[ListAssignment, MatchingAssignment]:
    lists = ListAssignment({v: tuple(cs) for v, cs in dump.lists.items()})
    matching = MatchingAssignment({(e.u, e.v): frozenset(map(tuple, e.pairs)) for e in dump.edges})
    return lists, matching


def read_assignment(path: str | Path, g: Graph) -> tuple[ListAssignment, MatchingAssignment]:
    return parse_assignment(Path(path).read_text(encoding="utf-8"), g)


def write_assignment(lists: ListAssignment, matching: MatchingAssignment, path: str | Path) -> None:
    Path(path).write_text(serialize_assignment(lists, matching), encoding="utf-8")
