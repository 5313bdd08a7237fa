"""Dense symmetric eigendecomposition, multiplicity grouping, and principal eigenpairs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graphs import MatrixKind

# Default absolute tolerance for merging nearly-equal eigenvalues.  Integer
# eigenvalues dominate the closed forms and solver noise is ~1e-14, so 1e-6
# separates every genuinely distinct pair that occurs here.
GROUPING_TOL = 1e-6


class EigenError(RuntimeError):
    """The eigensolver failed to converge."""


class DisconnectedGraphError(ValueError):
    """Principal eigenpair of A or Q requested for a disconnected graph.

    Without irreducibility the top eigenvector need not be positive, so the
    level-set structure used downstream is not guaranteed.
    """


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in non-increasing order with matching orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray

    def max_residual(self, m: np.ndarray) -> float:
        """max_i ||M v_i - lambda_i v_i||_inf."""
        return float(np.abs(np.asarray(m) @ self.vectors - self.vectors * self.values).max())

    def orthonormality_defect(self) -> float:
        k = self.vectors.shape[1]
        return float(np.abs(self.vectors.T @ self.vectors - np.eye(k)).max())


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues grouped into (value, multiplicity) pairs, values strictly decreasing."""

    groups: tuple[tuple[float, int], ...]

    @property
    def order(self) -> int:
        """Total multiplicity, i.e. the order of the underlying matrix."""
        return sum(mult for _, mult in self.groups)

    def values(self) -> tuple[float, ...]:
        return tuple(value for value, _ in self.groups)

    def expanded(self) -> tuple[float, ...]:
        """Every eigenvalue repeated according to its multiplicity, non-increasing."""
        return tuple(value for value, mult in self.groups for _ in range(mult))


@dataclass(frozen=True)
class PrincipalPair:
    """Largest eigenvalue with an eigenvector rescaled to unit first entry."""

    radius: float
    vector: np.ndarray


def eig_sym(m: np.ndarray) -> EigenDecomposition:
    """Full eigendecomposition of a dense real symmetric matrix.

    Values come back non-increasing; column i of ``vectors`` pairs with
    ``values[i]``.  Raises EigenError if the solver does not converge.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = np.abs(a).max() if a.size else 0.0
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(1.0, scale)):
        raise ValueError("matrix is not symmetric")
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise EigenError(f"symmetric eigensolver failed to converge: {exc}") from exc
    return EigenDecomposition(values=values[::-1].copy(), vectors=vectors[:, ::-1].copy())


def group_spectrum(values: np.ndarray, tol: float = GROUPING_TOL) -> Spectrum:
    """Group non-increasing eigenvalues into (value, multiplicity) pairs.

    Adjacent values within ``tol`` land in one group whose value is the
    group mean.
    """
    vals = [float(v) for v in values]
    for i in range(len(vals) - 1):
        if vals[i] < vals[i + 1]:
            raise ValueError("eigenvalues must be non-increasing")
    groups: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i - 1] - vals[i] > tol:
            block = vals[start:i]
            groups.append((sum(block) / len(block), len(block)))
            start = i
    return Spectrum(tuple(groups))


def _irreducible(a: np.ndarray) -> bool:
    """Connectivity of the off-diagonal nonzero pattern (= graph connectivity)."""
    n = a.shape[0]
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and j not in seen and a[i, j] != 0.0:
                seen.add(j)
                queue.append(j)
    return len(seen) == n


def principal_pair(m: np.ndarray, kind: MatrixKind) -> PrincipalPair:
    """Largest eigenvalue and an eigenvector of it, rescaled so entry 1 equals 1.

    For adjacency and signless Laplacian matrices the underlying graph must
    be connected: the matrix is then irreducible and nonnegative, so the top
    eigenvalue is simple and the eigenvector strictly positive.
    """
    a = np.asarray(m, dtype=float)
    if kind in (MatrixKind.ADJACENCY, MatrixKind.SIGNLESS_LAPLACIAN) and not _irreducible(a):
        raise DisconnectedGraphError(
            f"{kind.value} principal pair needs a connected graph (matrix is reducible)"
        )
    dec = eig_sym(a)
    v = dec.vectors[:, 0]
    if abs(v[0]) < 1e-12 * max(1.0, float(np.abs(v).max())):
        raise EigenError("leading eigenvector has a numerically zero first entry; cannot rescale")
    return PrincipalPair(radius=float(dec.values[0]), vector=v / v[0])
