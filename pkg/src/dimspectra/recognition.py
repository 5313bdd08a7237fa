"""Validity checks for matchings and DIMs, plus complete-DIM graph recognition.

Recognition runs in polynomial time along two routes: a purely combinatorial
one driven by the degree partition, and a spectral one that reads the
candidate partition off the level sets of the adjacency principal
eigenvector.  Both finish with the same exhaustive partition verifier, so
the spectral route can produce no false positives.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .eigen import principal_pair
from .graphs import Edge, Graph, MatrixKind, matrix, normalize_edge

# Principal-eigenvector entries within this relative tolerance form one level set.
LEVEL_TOL = 1e-6


@dataclass(frozen=True)
class DimCertificate:
    """A dominating induced matching together with its induced vertex partition."""

    matching: tuple[Edge, ...]
    matched_vertices: frozenset[int]
    independent: frozenset[int]
    complete: bool


def _normalized_edge_set(g: Graph, m: Iterable[tuple[int, int]]) -> set[Edge]:
    edges = {normalize_edge(u, v) for u, v in m}
    missing = edges - g.edges
    if missing:
        raise ValueError(f"edges {sorted(missing)} are not edges of the graph")
    return edges


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of g has both ends in s."""
    vertices = set(s)
    for v in vertices:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    return all(not (u in vertices and v in vertices) for u, v in g.edges)


def is_induced_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    """True iff the matched vertices induce exactly the 1-regular graph with edge set m."""
    edges = _normalized_edge_set(g, m)
    covered: set[int] = set()
    for u, v in edges:
        if u in covered or v in covered:
            return False
        covered.update((u, v))
    for u, v in g.edges:
        if u in covered and v in covered and (u, v) not in edges:
            return False
    return True


def is_dim(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    """True iff m is a dominating induced matching of g.

    Every edge of g must be in m or share an end-vertex with exactly one
    edge of m; for a matching this also forces the induced condition.
    """
    edges = _normalized_edge_set(g, m)
    owner: dict[int, Edge] = {}
    for u, v in edges:
        if u in owner or v in owner:
            return False
        owner[u] = owner[v] = (u, v)
    for u, v in g.edges:
        if (u, v) in edges:
            continue
        touching = {owner[w] for w in (u, v) if w in owner}
        if len(touching) != 1:
            return False
    return True


def _verify_partition(g: Graph, matched: frozenset[int], indep: frozenset[int]) -> DimCertificate | None:
    """Check that (matched, indep) is the partition of a complete DIM and certify it."""
    if len(matched) < 2 or len(matched) % 2 or not indep:
        return None
    adj = g.adjacency
    matching: list[Edge] = []
    for v in matched:
        inside = adj[v] & matched
        if len(inside) != 1 or not indep <= adj[v]:
            return None
        w = next(iter(inside))
        if v < w:
            matching.append((v, w))
    if len(matching) != len(matched) // 2:
        return None
    for u in indep:
        if adj[u] != matched:
            return None
    return DimCertificate(
        matching=tuple(sorted(matching)),
        matched_vertices=matched,
        independent=indep,
        complete=True,
    )


def _candidate_partitions(g: Graph) -> list[tuple[frozenset[int], frozenset[int]]]:
    degree_values = sorted({g.degree(v) for v in g.vertices})
    if len(degree_values) > 2:
        return []
    everyone = frozenset(g.vertices)
    parts: list[tuple[frozenset[int], frozenset[int]]] = []
    seen: set[frozenset[int]] = set()

    def add(matched: frozenset[int]) -> None:
        if matched not in seen:
            seen.add(matched)
            parts.append((matched, everyone - matched))

    if len(degree_values) == 2:
        # Distinct degrees force the partition: matched vertices have degree
        # s+1, independent ones 2m.  Try both assignments.
        by_degree = {
            value: frozenset(v for v in g.vertices if g.degree(v) == value)
            for value in degree_values
        }
        add(by_degree[degree_values[0]])
        add(by_degree[degree_values[1]])
    else:
        # Regular graph (s+1 = 2m).  Hypothesis "v independent" pins the
        # matched set to N(v); hypothesis "uv in the matching" pins the
        # independent set to N(u) - {v}.
        for v in g.vertices:
            add(frozenset(g.adjacency[v]))
        for u, v in g.sorted_edges:
            add(everyone - (g.adjacency[u] - {v}))
    return parts


def recognize_cdim(g: Graph) -> DimCertificate | None:
    """Recognize whether g's edge set is a complete DIM, in O(n + |E|) per hypothesis.

    Returns a certificate with the lexicographically least matching, or None.
    """
    if g.n < 3 or not g.edges:
        return None
    certs = [cert for part in _candidate_partitions(g) if (cert := _verify_partition(g, *part))]
    if not certs:
        return None
    return min(certs, key=lambda c: c.matching)


def _level_sets(vector, tol: float) -> list[frozenset[int]]:
    scale = max(abs(float(x)) for x in vector)
    ranked = sorted((float(x), i + 1) for i, x in enumerate(vector))
    levels: list[set[int]] = [{ranked[0][1]}]
    previous = ranked[0][0]
    for value, vertex in ranked[1:]:
        if value - previous > tol * scale:
            levels.append(set())
        levels[-1].add(vertex)
        previous = value
    return [frozenset(level) for level in levels]


def recognize_cdim_spectral(g: Graph) -> DimCertificate | None:
    """Complete-DIM recognition via the adjacency principal eigenvector.

    On a complete-DIM graph the eigenvector takes one value on matched
    vertices and one on independent ones, so its level sets propose the
    partition; a combinatorial verifier then accepts or rejects.  Requires a
    connected graph.  With a single level set (the graph is regular) this
    falls back to the combinatorial recognizer.
    """
    if not g.is_connected():
        raise ValueError(f"spectral recognition needs a connected graph (n={g.n})")
    pair = principal_pair(matrix(g, MatrixKind.ADJACENCY), MatrixKind.ADJACENCY)
    levels = _level_sets(pair.vector, LEVEL_TOL)
    if len(levels) > 2:
        return None
    if len(levels) == 1:
        return recognize_cdim(g)
    first, second = levels
    certs = [
        cert
        for part in ((first, second), (second, first))
        if (cert := _verify_partition(g, *part))
    ]
    if not certs:
        return None
    return min(certs, key=lambda c: c.matching)
