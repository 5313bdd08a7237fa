"""Undirected simple graphs with 1-based labels, their matrices, and edge-list I/O.

Vertices are labelled 1..n and edges are stored normalized as (u, v) with
u < v.  Graphs are immutable after construction and safe to share between
concurrent readers.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list text."""


class MatrixKind(Enum):
    """The three standard symmetric matrices of a graph."""

    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless_laplacian"


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: a vertex count plus a set of normalized edges."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) invalid for n={self.n}")

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        """Neighbour sets keyed by vertex label."""
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self.adjacency[v]) for v in self.vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def is_connected(self) -> bool:
        seen = {1}
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from possibly unordered or duplicated vertex pairs.

    Rejects self-loops, out-of-range labels, and n < 1.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    edges: set[Edge] = set()
    for u, v in pairs:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"vertex pair ({u}, {v}) out of range 1..{n}")
        edges.add(normalize_edge(u, v))
    return Graph(n, frozenset(edges))


def matrix(g: Graph, kind: MatrixKind) -> np.ndarray:
    """Dense adjacency, Laplacian (D - A) or signless Laplacian (D + A) matrix."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u - 1, v - 1] = a[v - 1, u - 1] = 1.0
    if kind is MatrixKind.ADJACENCY:
        return a
    d = np.diag(a.sum(axis=1))
    if kind is MatrixKind.LAPLACIAN:
        return d - a
    return d + a


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every edge between the two vertex sets.

    Vertices of g2 are relabelled by adding |V(g1)|.
    """
    shift = g1.n
    edges = set(g1.edges)
    edges.update((u + shift, v + shift) for u, v in g2.edges)
    edges.update((u, v + shift) for u in g1.vertices for v in g2.vertices)
    return Graph(g1.n + g2.n, frozenset(edges))


def generate_cdim(m: int, s: int) -> Graph:
    """The graph whose edge set is a complete dominating induced matching of size m.

    Equals the join of m disjoint edges with s isolated vertices: matching
    edges (2i-1, 2i) for i <= m, plus all edges between {1..2m} and
    {2m+1..2m+s}.  Matched vertices get degree s+1, independent ones 2m.
    """
    if m < 1:
        raise ValueError(f"matching size must be >= 1, got {m}")
    if s < 1:
        raise ValueError(f"independent-set size must be >= 1, got {s}")
    n = 2 * m + s
    edges = {(2 * i - 1, 2 * i) for i in range(1, m + 1)}
    edges.update((u, v) for u in range(1, 2 * m + 1) for v in range(2 * m + 1, n + 1))
    return Graph(n, frozenset(edges))


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def null_graph(n: int) -> Graph:
    """Graph of n isolated vertices."""
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def parse_graph_file(text: str) -> Graph:
    """Parse edge-list text: '# comment' lines, a 'n <count>' header, then 'u v' lines."""
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>', got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: vertex count {tokens[1]!r} is not an integer") from None
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex label in {line!r}") from None
        pairs.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header line")
    try:
        return from_edge_list(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: header then edges sorted lexicographically."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"
