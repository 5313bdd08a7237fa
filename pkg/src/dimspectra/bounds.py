"""Eigenvalue-derived bounds on the size of a dominating induced matching.

All bounds here are conditional statements: *if* the graph has a DIM (of any
size m), then m obeys the reported inequality.  None of them assert that a
DIM exists.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigen import Spectrum, eig_sym, group_spectrum
from .graphs import Graph, MatrixKind, matrix, min_degree

# Guard added toward the exact value before ceil/floor so analytically
# integral bounds do not misround.
CEIL_GUARD = 1e-9
# One-sided slack when counting eigenvalues <= -1 or >= 1: exact +-1
# eigenvalues are the common case and must not be lost to rounding.
LAMBDA_TOL = 1e-7
EQUALITY_TOL = 1e-9


class NotApplicableError(ValueError):
    """The bound's applicability precondition fails for these inputs."""


def _guarded_ceil(x: float) -> int:
    return math.ceil(x - CEIL_GUARD)


def _guarded_floor(x: float) -> int:
    return math.floor(x + CEIL_GUARD)


@dataclass(frozen=True)
class IndexInequality:
    """Comparison of (n/2)^2 against rho(rho-1).

    The inequality lhs >= rhs holds for every graph with a DIM; equality
    occurs exactly for complete-DIM graphs on n = 4m vertices.
    """

    holds: bool
    near_equality: bool
    lhs: float
    rhs: float


def index_inequality(n: int, rho: float) -> IndexInequality:
    """Check (n/2)^2 >= rho(rho-1), flagging equality within 1e-9."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    lhs = (n / 2.0) ** 2
    rhs = rho * (rho - 1.0)
    return IndexInequality(
        holds=rhs - lhs <= EQUALITY_TOL,
        near_equality=abs(lhs - rhs) <= EQUALITY_TOL,
        lhs=lhs,
        rhs=rhs,
    )


def dim_size_roots(n: int, rho: float) -> tuple[float, float]:
    """Real roots (n -+ sqrt(n^2 - 4(rho^2 - rho))) / 4 bracketing any DIM size.

    Raises NotApplicableError on a nonpositive radicand, which cannot occur
    for a graph with a DIM that is not itself a complete-DIM graph.
    """
    radicand = n * n - 4.0 * (rho * rho - rho)
    if radicand <= 0.0:
        raise NotApplicableError(
            f"radicand n^2 - 4(rho^2 - rho) = {radicand} is not positive"
        )
    root = math.sqrt(radicand)
    return (n - root) / 4.0, (n + root) / 4.0


def dim_size_window(n: int, rho: float) -> tuple[int, int]:
    """Integer window [lo, hi] containing every DIM size of a non-complete-DIM graph."""
    lo, hi = dim_size_roots(n, rho)
    return _guarded_ceil(lo), _guarded_floor(hi)


def dim_lower_bound_adjacency_raw(n: int, delta_min: int, rho: float) -> float:
    """Raw value n(2*delta - rho) / (2(2*delta - 1)); needs minimum degree >= 1."""
    if delta_min < 1:
        raise NotApplicableError(f"adjacency lower bound needs minimum degree >= 1, got {delta_min}")
    return n * (2.0 * delta_min - rho) / (2.0 * (2.0 * delta_min - 1.0))


def dim_lower_bound_adjacency(n: int, delta_min: int, rho: float) -> int:
    """Ceiling of the adjacency-index lower bound, clamped below at 0."""
    return max(0, _guarded_ceil(dim_lower_bound_adjacency_raw(n, delta_min, rho)))


def dim_lower_bound_laplacian_raw(n: int, delta_min: int, trace_l: float, mu1: float) -> float:
    """Raw value (tr(L) - n(mu1 - 2*delta)) / (2(2*delta + 1)); needs minimum degree >= 1."""
    if delta_min < 1:
        raise NotApplicableError(f"Laplacian lower bound needs minimum degree >= 1, got {delta_min}")
    return (trace_l - n * (mu1 - 2.0 * delta_min)) / (2.0 * (2.0 * delta_min + 1.0))


def dim_lower_bound_laplacian(n: int, delta_min: int, trace_l: float, mu1: float) -> int:
    return max(0, _guarded_ceil(dim_lower_bound_laplacian_raw(n, delta_min, trace_l, mu1)))


def dim_lower_bound_signless_raw(n: int, delta_min: int, trace_q: float, q1: float) -> float:
    """Raw value (tr(Q) - n(q1 - 2*delta)) / (2(2*delta - 1)); needs minimum degree >= 1."""
    if delta_min < 1:
        raise NotApplicableError(f"signless lower bound needs minimum degree >= 1, got {delta_min}")
    return (trace_q - n * (q1 - 2.0 * delta_min)) / (2.0 * (2.0 * delta_min - 1.0))


def dim_lower_bound_signless(n: int, delta_min: int, trace_q: float, q1: float) -> int:
    return max(0, _guarded_ceil(dim_lower_bound_signless_raw(n, delta_min, trace_q, q1)))


def _lambda_counts(spec: Spectrum) -> tuple[int, int]:
    low = sum(mult for value, mult in spec.groups if value <= -1.0 + LAMBDA_TOL)
    high = sum(mult for value, mult in spec.groups if value >= 1.0 - LAMBDA_TOL)
    return low, high


def induced_matching_upper_bound(spec: Spectrum) -> int:
    """min(#eigenvalues <= -1, #eigenvalues >= 1) of an adjacency spectrum.

    Bounds the size of every induced matching of the graph; counts carry
    multiplicity and use the one-sided LAMBDA_TOL slack.
    """
    low, high = _lambda_counts(spec)
    return min(low, high)


def interlacing_counts(spec: Spectrum, m: int) -> bool:
    """True iff the spectrum has at least m eigenvalues <= -1 and at least m >= 1."""
    low, high = _lambda_counts(spec)
    return low >= m and high >= m


@dataclass(frozen=True)
class BoundsReport:
    """Every applicable eigenvalue bound for one graph, raw values alongside.

    Optional fields are None exactly when the bound's precondition fails:
    the window needs a positive radicand, the three lower bounds need
    minimum degree >= 1.
    """

    n: int
    min_degree: int
    rho_a: float
    mu_1: float
    q_1: float
    trace_l: float
    trace_q: float
    index_inequality: IndexInequality
    window: tuple[int, int] | None
    window_roots: tuple[float, float] | None
    lb_adjacency: int | None
    lb_adjacency_raw: float | None
    lb_laplacian: int | None
    lb_laplacian_raw: float | None
    lb_signless: int | None
    lb_signless_raw: float | None
    ub_lambda_count: int


def full_report(g: Graph) -> BoundsReport:
    """Compute all spectra once and fill in every applicable bound."""
    a = matrix(g, MatrixKind.ADJACENCY)
    lap = matrix(g, MatrixKind.LAPLACIAN)
    q = matrix(g, MatrixKind.SIGNLESS_LAPLACIAN)
    values_a = eig_sym(a).values
    rho = float(values_a[0])
    mu1 = float(eig_sym(lap).values[0])
    q1 = float(eig_sym(q).values[0])
    delta = min_degree(g)
    trace_l = float(np.trace(lap))
    trace_q = float(np.trace(q))

    try:
        roots = dim_size_roots(g.n, rho)
        window = (_guarded_ceil(roots[0]), _guarded_floor(roots[1]))
    except NotApplicableError:
        roots = None
        window = None

    lb_adj_raw = lb_lap_raw = lb_sig_raw = None
    lb_adj = lb_lap = lb_sig = None
    if delta >= 1:
        lb_adj_raw = dim_lower_bound_adjacency_raw(g.n, delta, rho)
        lb_adj = max(0, _guarded_ceil(lb_adj_raw))
        lb_lap_raw = dim_lower_bound_laplacian_raw(g.n, delta, trace_l, mu1)
        lb_lap = max(0, _guarded_ceil(lb_lap_raw))
        lb_sig_raw = dim_lower_bound_signless_raw(g.n, delta, trace_q, q1)
        lb_sig = max(0, _guarded_ceil(lb_sig_raw))

    return BoundsReport(
        n=g.n,
        min_degree=delta,
        rho_a=rho,
        mu_1=mu1,
        q_1=q1,
        trace_l=trace_l,
        trace_q=trace_q,
        index_inequality=index_inequality(g.n, rho),
        window=window,
        window_roots=roots,
        lb_adjacency=lb_adj,
        lb_adjacency_raw=lb_adj_raw,
        lb_laplacian=lb_lap,
        lb_laplacian_raw=lb_lap_raw,
        lb_signless=lb_sig,
        lb_signless_raw=lb_sig_raw,
        ub_lambda_count=induced_matching_upper_bound(group_spectrum(values_a)),
    )
