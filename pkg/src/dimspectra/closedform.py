"""Closed-form spectra and principal eigenvectors of complete-DIM graphs.

A graph whose edge set is a complete dominating induced matching of size m on
n vertices is the join of m disjoint edges (r = 2m vertices) with an
independent set of s = n - 2m isolated vertices.  Over the (matched,
independent) partition each of the three standard matrices reduces to a 2x2
quotient whose eigenvalues lift to eigenvalues of the full matrix, which
yields every spectrum and principal eigenvector in closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigen import PrincipalPair, Spectrum
from .graphs import MatrixKind

# Coinciding closed-form eigenvalues are merged at this tolerance; the
# integer-valued groups compare exactly, radicals numerically.
MERGE_TOL = 1e-12


@dataclass(frozen=True)
class QuotientMatrix:
    """2x2 quotient over the (matched, independent) blocks.

    Represents [[gamma1, delta*sqrt(r*s)], [delta*sqrt(r*s), gamma2]] where
    r = 2m counts matched vertices and s independent ones.
    """

    gamma1: float
    gamma2: float
    delta: int
    r: int
    s: int

    def as_array(self) -> np.ndarray:
        off = self.delta * math.sqrt(self.r * self.s)
        return np.array([[self.gamma1, off], [off, self.gamma2]])


def _require_sizes(m: int, s: int) -> None:
    if m < 1:
        raise ValueError(f"matching size must be >= 1, got {m}")
    if s < 1:
        raise ValueError(f"independent-set size must be >= 1, got {s}")


def _require_partition(n: int, m: int) -> None:
    if m < 1:
        raise ValueError(f"matching size must be >= 1, got {m}")
    if n <= 2 * m:
        raise ValueError(f"need n >= 2m+1 (nonempty independent set), got n={n}, m={m}")


def quotient_matrix(kind: MatrixKind, m: int, s: int) -> QuotientMatrix:
    """The kind-specific 2x2 quotient for matching size m and independent size s."""
    _require_sizes(m, s)
    r = 2 * m
    if kind is MatrixKind.ADJACENCY:
        return QuotientMatrix(1.0, 0.0, 1, r, s)
    if kind is MatrixKind.LAPLACIAN:
        # Diagonal from the shifted blocks (L + sI on the matching side,
        # L + rI on the independent side), whose constant row sums are s and
        # r.  The unshifted row constants would be -s and -r; the shifted
        # form is the one whose eigenvalues {n, 0} are Laplacian eigenvalues.
        return QuotientMatrix(float(s), float(r), -1, r, s)
    return QuotientMatrix(float(s + 2), float(r), 1, r, s)


def quotient_eigenvalues(b: QuotientMatrix) -> tuple[float, float]:
    """Eigenvalues (theta1 >= theta2) of the quotient, by the explicit radical."""
    half_sum = (b.gamma1 + b.gamma2) / 2.0
    half_gap = math.sqrt((b.gamma1 - b.gamma2) ** 2 + 4.0 * b.delta**2 * b.r * b.s) / 2.0
    return half_sum + half_gap, half_sum - half_gap


def lift_eigenvector(theta: float, x: float, r: int, s: int) -> np.ndarray:
    """Lift a quotient eigenvector (1, x) for theta to the full matrix.

    The lifted vector is (j_r, sqrt(r/s) * x * j_s) and satisfies
    C w = theta w for the full n x n matrix C partitioned over the blocks.
    """
    if s < 1:
        raise ValueError(f"independent-set size must be >= 1, got {s}")
    if r < 1:
        raise ValueError(f"matched block size must be >= 1, got {r}")
    tail = math.sqrt(r / s) * x
    return np.concatenate([np.ones(r), np.full(s, tail)])


def quotient_eigenvector_x(b: QuotientMatrix, theta: float) -> float:
    """Second entry x of the quotient eigenvector (1, x) for eigenvalue theta."""
    return (theta - b.gamma1) / (b.delta * math.sqrt(b.r * b.s))


def _merged_spectrum(groups: list[tuple[float, int]]) -> Spectrum:
    kept = sorted((g for g in groups if g[1] > 0), key=lambda g: -g[0])
    merged: list[tuple[float, int]] = []
    for value, mult in kept:
        if merged and merged[-1][0] - value <= MERGE_TOL:
            merged[-1] = (merged[-1][0], merged[-1][1] + mult)
        else:
            merged.append((value, mult))
    return Spectrum(tuple(merged))


def cdim_spectrum(kind: MatrixKind, n: int, m: int) -> Spectrum:
    """Closed-form spectrum of the complete-DIM graph with |M| = m on n vertices."""
    _require_partition(n, m)
    s = n - 2 * m
    if kind is MatrixKind.ADJACENCY:
        radicand = 1 + 8 * m * s
        if radicand < 0:
            raise ValueError(f"negative radicand {radicand} (bad m, n)")
        root = math.sqrt(radicand)
        groups = [
            ((1.0 + root) / 2.0, 1),
            (1.0, m - 1),
            (0.0, s - 1),
            (-1.0, m),
            ((1.0 - root) / 2.0, 1),
        ]
    elif kind is MatrixKind.LAPLACIAN:
        groups = [
            (float(n), 1),
            (float(s + 2), m),
            (float(s), m - 1),
            (float(2 * m), s - 1),
            (0.0, 1),
        ]
    else:
        radicand = (2 + n) ** 2 - 16 * m
        if radicand < 0:
            raise ValueError(f"negative radicand {radicand} (bad m, n)")
        root = math.sqrt(radicand)
        groups = [
            ((2.0 + n + root) / 2.0, 1),
            (float(s + 2), m - 1),
            (float(s), m),
            (float(2 * m), s - 1),
            ((2.0 + n - root) / 2.0, 1),
        ]
    return _merged_spectrum(groups)


def cdim_principal(kind: MatrixKind, n: int, m: int) -> PrincipalPair:
    """Closed-form spectral radius and principal eigenvector (unit first entry)."""
    _require_partition(n, m)
    s = n - 2 * m
    r = 2 * m
    if kind is MatrixKind.ADJACENCY:
        radius = (1.0 + math.sqrt(1 + 8 * m * s)) / 2.0
        tail = (radius - 1.0) / s
    elif kind is MatrixKind.LAPLACIAN:
        radius = float(n)
        tail = -float(r) / s
    else:
        radius = (2.0 + n + math.sqrt((2 + n) ** 2 - 16 * m)) / 2.0
        tail = (radius - (s + 2.0)) / s
    vector = np.concatenate([np.ones(r), np.full(s, tail)])
    return PrincipalPair(radius=radius, vector=vector)


def cdim_radius_upper_bounds(n: int, m: int) -> tuple[float, float]:
    """Upper bounds on the adjacency and signless Laplacian spectral radii.

    Valid for every graph of order n with a dominating induced matching of
    size m; attained exactly by the complete-DIM graph.
    """
    _require_partition(n, m)
    rho_a = (1.0 + math.sqrt(1 + 8 * m * (n - 2 * m))) / 2.0
    rho_q = (2.0 + n + math.sqrt((2 + n) ** 2 - 16 * m)) / 2.0
    return rho_a, rho_q
