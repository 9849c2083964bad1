"""Dense SVD with deterministic signs, rank-k reconstruction and folding.

Factors are truncated to the numerical rank (singular values above
1e-10 * sigma_1) and sign-fixed so the first non-negligible entry of each
left singular vector is positive, which keeps label induction stable
across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RANK_TOLERANCE = 1e-10
_SIGN_EPS = 1e-12


@dataclass(frozen=True)
class SvdFactors:
    """Thin SVD A = U diag(sigma) V^T truncated to numerical rank r."""

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    r: int


@dataclass(frozen=True)
class TruncationChoice:
    k: int
    quality: float


def svd(matrix: np.ndarray) -> SvdFactors:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.size == 0:
        raise ValueError("matrix must be 2-dimensional and non-empty")
    if not np.all(np.isfinite(matrix)):
        raise ValueError("matrix contains non-finite entries")
    u, sigma, vt = np.linalg.svd(matrix, full_matrices=False)
    if sigma.size and sigma[0] > 0:
        r = int(np.sum(sigma > RANK_TOLERANCE * sigma[0]))
    else:
        r = 0
    u, sigma, v = u[:, :r], sigma[:r], vt[:r].T
    for j in range(r):
        col = u[:, j]
        nonzero = np.nonzero(np.abs(col) > _SIGN_EPS * np.abs(col).max())[0]
        if nonzero.size and col[nonzero[0]] < 0:
            u[:, j] = -col
            v[:, j] = -v[:, j]
    return SvdFactors(u=u, sigma=sigma, v=v, r=r)


def singular_mass_quality(sigma: np.ndarray, k: int) -> float:
    """Cumulative singular-value mass ratio q(k), exactly 1 at k = r."""
    cumulative = np.cumsum(sigma)
    return float(cumulative[k - 1] / cumulative[-1])


def reconstruct_rank_k(factors: SvdFactors, k: int) -> np.ndarray:
    """Best rank-k approximation U_k diag(sigma_k) V_k^T."""
    if not 1 <= k <= factors.r:
        raise ValueError(f"k must be in [1, {factors.r}], got {k}")
    return (factors.u[:, :k] * factors.sigma[:k]) @ factors.v[:, :k].T


def fold_document(factors: SvdFactors, k: int, doc_vector: np.ndarray) -> np.ndarray:
    """Project a term-space vector into the k-dimensional semantic space,
    sigma_k^{-1} U_k^T q."""
    if not 1 <= k <= factors.r:
        raise ValueError(f"k must be in [1, {factors.r}], got {k}")
    doc_vector = np.asarray(doc_vector, dtype=float)
    if doc_vector.shape != (factors.u.shape[0],):
        raise ValueError("document vector length does not match term count")
    return (factors.u[:, :k].T @ doc_vector) / factors.sigma[:k]


def cosine_similarity(x: np.ndarray, y: np.ndarray) -> float:
    """Cosine of two equal-length vectors; 0 if either has zero norm."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("vectors must be one-dimensional and equal length")
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx == 0 or ny == 0:
        return 0.0
    return float(np.dot(x, y) / (nx * ny))
