"""Exhaustive ground truth for small graphs: DIM and induced-matching enumeration.

The enumerators are deliberately brute force (backtracking with domination
pruning) and guarded by instance-size caps; they exist to cross-check the
closed forms and eigenvalue bounds, not to be fast on large inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .graphs import Edge, Graph

MAX_ORACLE_EDGES = 40
MAX_EXHAUSTIVE_VERTICES = 6


class SizeGuardError(ValueError):
    """Instance exceeds an enumeration guard."""


@dataclass(frozen=True)
class OracleResult:
    """All DIMs of a graph plus its maximum induced matching size."""

    dims: tuple[tuple[Edge, ...], ...]
    max_induced_matching: int
    min_dim_size: int | None
    max_dim_size: int | None


def _check_guard(g: Graph, max_edges: int) -> None:
    if g.edge_count > max_edges:
        raise SizeGuardError(f"graph has {g.edge_count} edges, enumeration guard is {max_edges}")


def _search_dims(g: Graph) -> list[tuple[Edge, ...]]:
    edges = g.sorted_edges
    e_count = len(edges)
    if e_count == 0:
        # The empty matching vacuously dominates an edgeless graph.
        return [()]
    incident: list[list[int]] = [[] for _ in range(e_count)]
    for i in range(e_count):
        u1, v1 = edges[i]
        for j in range(i + 1, e_count):
            u2, v2 = edges[j]
            if u1 == u2 or u1 == v2 or v1 == u2 or v1 == v2:
                incident[i].append(j)
                incident[j].append(i)

    UNDECIDED, OUT = 0, 1
    state = [UNDECIDED] * e_count
    touch = [0] * e_count  # number of chosen matching edges sharing a vertex
    matched = [False] * (g.n + 1)
    chosen: list[int] = []
    undominated = 0  # OUT edges with touch 0
    found: list[tuple[Edge, ...]] = []

    def recurse(i: int) -> None:
        nonlocal undominated
        if i == e_count:
            if undominated == 0:
                found.append(tuple(edges[k] for k in chosen))
            return
        u, v = edges[i]
        if not matched[u] and not matched[v]:
            # Branch: take edge i into the matching.
            ok = True
            bumped: list[int] = []
            for j in incident[i]:
                touch[j] += 1
                bumped.append(j)
                if touch[j] == 1 and state[j] == OUT:
                    undominated -= 1
                elif touch[j] > 1:
                    # j would share a vertex with two matching edges.
                    ok = False
                    break
            if ok:
                matched[u] = matched[v] = True
                chosen.append(i)
                recurse(i + 1)
                chosen.pop()
                matched[u] = matched[v] = False
            for j in reversed(bumped):
                if touch[j] == 1 and state[j] == OUT:
                    undominated += 1
                touch[j] -= 1
        # Branch: leave edge i out; it must end up dominated exactly once.
        state[i] = OUT
        if touch[i] > 0:
            recurse(i + 1)
        else:
            undominated += 1
            dominatable = any(
                j > i and not matched[edges[j][0]] and not matched[edges[j][1]]
                for j in incident[i]
            )
            if dominatable:
                recurse(i + 1)
            undominated -= 1
        state[i] = UNDECIDED

    recurse(0)
    return found


def _conflict_masks(g: Graph) -> list[int]:
    """Bitmask per edge of the edges it cannot share an induced matching with."""
    edges = g.sorted_edges
    masks = [0] * len(edges)
    for i in range(len(edges)):
        u1, v1 = edges[i]
        for j in range(i + 1, len(edges)):
            u2, v2 = edges[j]
            shares = u1 == u2 or u1 == v2 or v1 == u2 or v1 == v2
            linked = shares or any(
                g.has_edge(a, b) for a in (u1, v1) for b in (u2, v2)
            )
            if linked:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _max_induced_matching(g: Graph) -> int:
    edges = g.sorted_edges
    e_count = len(edges)
    if e_count == 0:
        return 0
    masks = _conflict_masks(g)
    best = 0

    def recurse(i: int, count: int, banned: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if i == e_count or count + (e_count - i) <= best:
            return
        if not (banned >> i) & 1:
            recurse(i + 1, count + 1, banned | masks[i])
        recurse(i + 1, count, banned)

    recurse(0, 0, 0)
    return best


def enumerate_dims(g: Graph, max_edges: int = MAX_ORACLE_EDGES) -> OracleResult:
    """Every DIM of g in deterministic (sorted) order, plus matching statistics."""
    _check_guard(g, max_edges)
    dims = tuple(sorted(_search_dims(g)))
    sizes = [len(d) for d in dims]
    return OracleResult(
        dims=dims,
        max_induced_matching=_max_induced_matching(g),
        min_dim_size=min(sizes) if sizes else None,
        max_dim_size=max(sizes) if sizes else None,
    )


def max_induced_matching(g: Graph, max_edges: int = MAX_ORACLE_EDGES) -> int:
    """Largest size of an induced matching of g (0 for edgeless graphs)."""
    _check_guard(g, max_edges)
    return _max_induced_matching(g)


def all_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices in deterministic order; guarded at n <= 6."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    if n > MAX_EXHAUSTIVE_VERTICES:
        raise SizeGuardError(f"exhaustive enumeration capped at n <= {MAX_EXHAUSTIVE_VERTICES}, got {n}")
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for b, p in enumerate(pairs) if (mask >> b) & 1))


def random_graphs(n: int, count: int, edge_probability: float, seed: int) -> Iterator[Graph]:
    """Reproducible stream of Erdos-Renyi G(n, p) samples for a fixed seed."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    for _ in range(count):
        keep = rng.random(len(pairs)) < edge_probability
        yield Graph(n, frozenset(p for p, k in zip(pairs, keep) if k))
