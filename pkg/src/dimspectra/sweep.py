"""Soundness sweep: every eigenvalue bound checked against brute-force enumeration.

For each graph in a corpus the sweep enumerates all DIMs and induced
matchings exactly, then verifies every conditional bound, the index
inequality and its equality characterization, the spectral-radius caps, and
agreement of the two complete-DIM recognizers.  A clean sweep returns zero
violations.
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator

from .bounds import (
    NotApplicableError,
    dim_lower_bound_adjacency,
    dim_lower_bound_laplacian,
    dim_lower_bound_signless,
    dim_size_window,
    index_inequality,
    induced_matching_upper_bound,
    interlacing_counts,
)
from .closedform import cdim_radius_upper_bounds
from .eigen import eig_sym, group_spectrum
from .graphs import Graph, MatrixKind, matrix, min_degree
from .oracle import all_graphs, enumerate_dims, random_graphs
from .recognition import recognize_cdim, recognize_cdim_spectral

SWEEP_TOL = 1e-9
MU_TOL = 1e-7
_CHUNK = 512


@dataclass(frozen=True)
class Violation:
    graph: str
    check: str
    detail: str


@dataclass(frozen=True)
class GraphCheck:
    key: str
    has_dim: bool
    complete_dim: bool
    equality_case: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class SweepReport:
    graphs_checked: int
    dim_graphs: int
    complete_dim_graphs: int
    equality_cases: tuple[str, ...]
    violations: tuple[Violation, ...]


def graph_key(g: Graph) -> str:
    edges = ",".join(f"{u}-{v}" for u, v in g.sorted_edges)
    return f"n={g.n};{edges}"


def check_graph(g: Graph) -> GraphCheck:
    key = graph_key(g)
    violations: list[Violation] = []

    def flag(check: str, detail: str) -> None:
        violations.append(Violation(graph=key, check=check, detail=detail))

    n = g.n
    values_a = eig_sym(matrix(g, MatrixKind.ADJACENCY)).values
    rho = float(values_a[0])
    mu1 = float(eig_sym(matrix(g, MatrixKind.LAPLACIAN)).values[0])
    q1 = float(eig_sym(matrix(g, MatrixKind.SIGNLESS_LAPLACIAN)).values[0])
    spec_a = group_spectrum(values_a)

    if mu1 > n + MU_TOL:
        flag("mu1-order", f"mu1={mu1} exceeds n={n}")

    result = enumerate_dims(g)
    im_max = result.max_induced_matching
    ub = induced_matching_upper_bound(spec_a)
    if im_max > ub:
        flag("lambda-upper-bound", f"max induced matching {im_max} > bound {ub}")
    if not interlacing_counts(spec_a, im_max):
        flag("interlacing", f"fewer than {im_max} eigenvalues beyond +-1")

    cert = recognize_cdim(g)
    if g.is_connected():
        spectral = recognize_cdim_spectral(g)
        combinatorial = None if cert is None else cert.matching
        spectral_m = None if spectral is None else spectral.matching
        if combinatorial != spectral_m:
            flag("recognizer-agreement", f"combinatorial={combinatorial} spectral={spectral_m}")

    has_dim = bool(result.dims)
    equality_case = False
    if has_dim:
        sizes = sorted({len(d) for d in result.dims})
        ii = index_inequality(n, rho)
        if not ii.holds:
            flag("index-inequality", f"(n/2)^2={ii.lhs} < rho(rho-1)={ii.rhs}")
        expected_equality = cert is not None and n == 4 * len(cert.matching)
        if ii.near_equality != expected_equality:
            flag(
                "equality-characterization",
                f"near_equality={ii.near_equality} but complete-DIM-with-n=4m is {expected_equality}",
            )
        equality_case = ii.near_equality
        if cert is None:
            try:
                lo, hi = dim_size_window(n, rho)
            except NotApplicableError:
                flag("window-radicand", "radicand nonpositive for a non-complete-DIM graph with a DIM")
            else:
                for m in sizes:
                    if not lo <= m <= hi:
                        flag("window", f"DIM size {m} outside [{lo}, {hi}]")
        if min_degree(g) >= 1:
            smallest = result.min_dim_size
            trace = float(2 * g.edge_count)
            for name, bound in (
                ("lower-bound-adjacency", dim_lower_bound_adjacency(n, min_degree(g), rho)),
                ("lower-bound-laplacian", dim_lower_bound_laplacian(n, min_degree(g), trace, mu1)),
                ("lower-bound-signless", dim_lower_bound_signless(n, min_degree(g), trace, q1)),
            ):
                if bound > smallest:
                    flag(name, f"bound {bound} exceeds smallest DIM size {smallest}")
        for m in sizes:
            # The radius caps compare against the complete-DIM graph on the
            # same (n, m), which exists only when the independent side is
            # nonempty (n >= 2m+1).
            if m >= 1 and n >= 2 * m + 1:
                cap_a, cap_q = cdim_radius_upper_bounds(n, m)
                if rho > cap_a + SWEEP_TOL:
                    flag("radius-cap-adjacency", f"rho={rho} > {cap_a} at m={m}")
                if q1 > cap_q + SWEEP_TOL:
                    flag("radius-cap-signless", f"q1={q1} > {cap_q} at m={m}")

    return GraphCheck(
        key=key,
        has_dim=has_dim,
        complete_dim=cert is not None,
        equality_case=equality_case,
        violations=tuple(violations),
    )


def _check_batch(graphs: list[Graph]) -> list[GraphCheck]:
    return [check_graph(g) for g in graphs]


def _batched(graphs: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    batch: list[Graph] = []
    for g in graphs:
        batch.append(g)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def sweep(graphs: Iterable[Graph], jobs: int = 1) -> SweepReport:
    """Run check_graph over a corpus, optionally on a worker pool."""
    if jobs <= 1:
        checks: Iterable[GraphCheck] = map(check_graph, graphs)
        return _aggregate(checks)
    with multiprocessing.Pool(jobs) as pool:
        batches = pool.imap(_check_batch, _batched(graphs, _CHUNK))
        return _aggregate(check for batch in batches for check in batch)


def _aggregate(checks: Iterable[GraphCheck]) -> SweepReport:
    total = dim_graphs = complete = 0
    equality: list[str] = []
    violations: list[Violation] = []
    for check in checks:
        total += 1
        dim_graphs += check.has_dim
        complete += check.complete_dim
        if check.equality_case:
            equality.append(check.key)
        violations.extend(check.violations)
    return SweepReport(
        graphs_checked=total,
        dim_graphs=dim_graphs,
        complete_dim_graphs=complete,
        equality_cases=tuple(equality),
        violations=tuple(violations),
    )


def sweep_exhaustive(n: int, jobs: int = 1) -> SweepReport:
    """Sweep all labeled graphs on n vertices (guarded at n <= 6)."""
    return sweep(all_graphs(n), jobs=jobs)


def sweep_random(
    n: int, count: int, seed: int, edge_probability: float = 0.5, jobs: int = 1
) -> SweepReport:
    """Sweep a reproducible random sample of graphs on n vertices."""
    return sweep(random_graphs(n, count, edge_probability, seed), jobs=jobs)
