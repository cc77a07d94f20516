"""Spectral analysis of the transition matrix.

P is row-stochastic but not symmetric; it shares its (real) spectrum with
the symmetric M = D^{-1/2} W D^{-1/2}. We solve the symmetric problem and
map eigenvectors back through D^{-1/2}, which lands them directly on the
normalization y^T D y = 1. Each squared, degree-weighted coordinate then
reads as the probability of a word given the axis's latent class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .counts import NeighborhoodMatrix, TransitionMatrix
from .errors import DegenerateDegree


@dataclass
class SpectralResult:
    eigenvalues: np.ndarray   # all, sorted descending
    eigenvectors: np.ndarray  # (nt, m); column a-1 is axis a
    degrees: np.ndarray       # diagonal of D

    @property
    def n_axes(self) -> int:
        return self.eigenvectors.shape[1]

    def axis(self, a: int) -> np.ndarray:
        """Coordinates on eigen-axis a (1-based; axis 1 is trivial)."""
        return self.eigenvectors[:, a - 1]


@dataclass
class MembershipTable:
    values: np.ndarray  # (nt, m); column a-1 is class a

    def column(self, a: int) -> np.ndarray:
        return self.values[:, a - 1]


def spectral_decompose(p: TransitionMatrix, m: int | None = None) -> SpectralResult:
    """Eigendecomposition of P via the symmetric similarity transform.

    Eigenvalues come back sorted descending; each eigenvector y satisfies
    y^T D y = 1 and is sign-fixed so its largest-magnitude entry is positive
    (ties broken by lowest word id).
    """
    degree = np.asarray(p.degree, dtype=float)
    if np.any(degree <= 0):
        raise DegenerateDegree("zero normalization degree; upstream pipeline bug")
    if m is None:
        m = p.dim
    if m > p.dim:
        raise ValueError("cannot retain more axes than words")
    root = np.sqrt(degree)
    sym = p.matrix * root[:, None] / root[None, :]
    sym = 0.5 * (sym + sym.T)
    values, vectors = np.linalg.eigh(sym)
    order = np.argsort(-values, kind="stable")
    values = values[order]
    y = vectors[:, order[:m]] / root[:, None]
    for col in range(m):
        peak = int(np.argmax(np.abs(y[:, col])))
        if y[peak, col] < 0:
            y[:, col] = -y[:, col]
    return SpectralResult(values, y, degree)


def membership(result: SpectralResult, m: int | None = None) -> MembershipTable:
    """Per-class word distributions: entry(i, a) = d_i * y_a(i)^2.

    Class 1 (the trivial axis) recovers the empirical word distribution;
    every column sums to 1 by the y^T D y = 1 normalization.
    """
    if m is None:
        m = result.n_axes
    y = result.eigenvectors[:, :m]
    return MembershipTable(result.degrees[:, None] * y**2)


def generalized_residual(
    result: SpectralResult, w: NeighborhoodMatrix | np.ndarray, degrees: np.ndarray
) -> float:
    """Residual of (D - W) y = (1 - lambda) D y over the retained axes.

    Returns the max over axes of the inf-norm residual relative to ||D y||.
    """
    dense = w.to_dense() if isinstance(w, NeighborhoodMatrix) else np.asarray(w)
    degrees = np.asarray(degrees, dtype=float)
    worst = 0.0
    for col in range(result.n_axes):
        y = result.eigenvectors[:, col]
        lam = result.eigenvalues[col]
        dy = degrees * y
        lhs = dy - dense @ y
        rhs = (1.0 - lam) * dy
        scale = np.max(np.abs(dy))
        if scale == 0:
            continue
        worst = max(worst, float(np.max(np.abs(lhs - rhs)) / scale))
    return worst


def ncut_cost(w: NeighborhoodMatrix | np.ndarray, indicator: np.ndarray) -> float:
    """Quadratic cut cost sum_ij w(i,j) (z_i - z_j)^2 for a 0/1 indicator."""
    dense = w.to_dense() if isinstance(w, NeighborhoodMatrix) else np.asarray(w)
    z = np.asarray(indicator, dtype=float)
    diff = z[:, None] - z[None, :]
    return float(np.sum(dense * diff**2))
