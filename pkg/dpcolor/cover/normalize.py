"""Symmetry reduction for adversarial matching enumeration.

Feasibility is invariant under renaming the colors inside any one fiber. Walking a
BFS spanning forest from the root, each child's fiber can be renamed so that the
tree-edge matching becomes canonical: the identity-by-rank a[i] -> b[i] when the
child's list is at least as long as the parent's, or S[i] -> b[i] for a subset S
of the parent's list otherwise. Only non-tree edges keep every full matching.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations, islice, product
from math import comb, perm, prod
from typing import Iterator

from dpcolor.cover.assignment import ListAssignment, MatchingAssignment, Pair, injective_maps
from dpcolor.errors import AssignmentError
from dpcolor.graph.core import Edge, Graph, edge_key


def spanning_forest(g: Graph) -> list[tuple[int, int]]:
    """BFS tree edges as (parent, child), roots taken smallest-first, neighbors ascending."""
    seen: set[int] = set()
    tree: list[tuple[int, int]] = []
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            p = queue.popleft()
            for c in g.adjacency[p]:
                if c not in seen:
                    seen.add(c)
                    tree.append((p, c))
                    queue.append(c)
    return tree


def _oriented(u: int, v: int, pairs: list[Pair]) -> frozenset[Pair]:
    return frozenset(pairs) if u < v else frozenset((b, a) for a, b in pairs)


def edge_options(g: Graph, lists: ListAssignment) -> list[tuple[Edge, list[frozenset[Pair]]]]:
    """Candidate matchings per edge (sorted edge order); the first option of each is canonical."""
    parent_of = {edge_key(p, c): (p, c) for p, c in spanning_forest(g)}
    options: list[tuple[Edge, list[frozenset[Pair]]]] = []
    for u, v in g.edges():
        if (u, v) in parent_of:
            p, c = parent_of[(u, v)]
            a, b = lists[p], lists[c]
            if len(b) >= len(a):
                opts = [_oriented(p, c, list(zip(a, b)))]
            else:
                opts = [_oriented(p, c, list(zip(s, b))) for s in combinations(a, len(b))]
        else:
            opts = list(injective_maps(lists[u], lists[v]))
        options.append(((u, v), opts))
    return options


def count_normalized(g: Graph, lists: ListAssignment) -> int:
    tree = {edge_key(p, c): (p, c) for p, c in spanning_forest(g)}
    sizes = []
    for u, v in g.edges():
        if (u, v) in tree:
            p, c = tree[(u, v)]
            a, b = len(lists[p]), len(lists[c])
            sizes.append(1 if b >= a else comb(a, b))
        else:
            a, b = len(lists[u]), len(lists[v])
            sizes.append(perm(max(a, b), min(a, b)))
    return prod(sizes)


def normalized_assignments(
    g: Graph, lists: ListAssignment, start: int = 0, stop: int | None = None
) -> Iterator[MatchingAssignment]:
    """Full matching assignments up to fiber renaming, in lexicographic option order."""
    options = edge_options(g, lists)
    edges = [e for e, _ in options]
    for choice in islice(product(*(opts for _, opts in options)), start, stop):
        yield MatchingAssignment(dict(zip(edges, choice)))


def normalize_assignment(g: Graph, lists: ListAssignment, matching: MatchingAssignment) -> MatchingAssignment:
    """Rename fibers so every spanning-tree edge carries the identity-by-rank matching.

    Requires uniform list sizes and a bijection on every edge.
    """
    sizes = {len(cs) for _, cs in lists.items()}
    if len(sizes) > 1:
        raise AssignmentError(f"lists are not uniform: sizes {sorted(sizes)}")
    for u, v in g.edges():
        m = matching.edge_map(u, v)
        if len(m) != len(lists[u]):
            raise AssignmentError(f"matching on {u}-{v} is not a bijection ({len(m)} of {len(lists[u])} pairs)")

    perms: dict[int, dict[int, int]] = {}
    for p, c in spanning_forest(g):
        if p not in perms:
            perms[p] = {x: x for x in lists[p]}
        a, b = lists[p], lists[c]
        rank = {x: i for i, x in enumerate(a)}
        inverse = {y: x for x, y in matching.edge_map(p, c).items()}
        perms[c] = {y: b[rank[perms[p][inverse[y]]]] for y in b}
    return matching.relabeled(perms)
