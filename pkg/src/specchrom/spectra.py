"""Symmetric eigendecompositions, squared energies, and PSD splits.

The squared energies of a graph are the sums of squared positive and
squared negative adjacency eigenvalues. Eigenvalues within the zero
threshold (1e-9 scaled by dimension and largest entry) count as zero
and contribute to neither side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError
from .partitions import HPartition

ZERO_THRESHOLD_COEFF = 1e-9


def check_symmetric(a, name="matrix"):
    """Validate and return a float64 symmetric square array."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be square, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise ValueError(
            f"{name} is not symmetric; symmetrize as (a + a.T) / 2 first"
        )
    return arr


def zero_threshold(a):
    arr = np.asarray(a, dtype=np.float64)
    top = float(np.max(np.abs(arr))) if arr.size else 0.0
    return ZERO_THRESHOLD_COEFF * arr.shape[0] * top


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order; eigenvectors[:, i] pairs with
    eigenvalues[i]."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    zero_threshold: float

    @property
    def dim(self):
        return self.eigenvalues.shape[0]

    def multiplicity_of(self, value, tol=None):
        tol = self.zero_threshold if tol is None else tol
        tol = max(tol, 1e-12)
        return int(np.sum(np.abs(self.eigenvalues - value) <= tol))


def eigendecompose(a):
    arr = check_symmetric(a)
    try:
        w, v = np.linalg.eigh(arr)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigensolver did not converge: {exc}")
    w = w[::-1].copy()
    v = v[:, ::-1].copy()
    w.flags.writeable = False
    v.flags.writeable = False
    return Spectrum(w, v, zero_threshold(arr))


def squared_energies(spectrum):
    """(s_plus, s_minus): squared positive and negative eigenvalue mass."""
    w = spectrum.eigenvalues
    eps = spectrum.zero_threshold
    s_plus = float(np.sum(w[w > eps] ** 2))
    s_minus = float(np.sum(w[w < -eps] ** 2))
    return s_plus, s_minus


def inertia(spectrum):
    """(n_plus, n_minus, n_zero) eigenvalue counts by sign."""
    w = spectrum.eigenvalues
    eps = spectrum.zero_threshold
    n_plus = int(np.sum(w > eps))
    n_minus = int(np.sum(w < -eps))
    return n_plus, n_minus, spectrum.dim - n_plus - n_minus


@dataclass(frozen=True)
class SpectralSplit:
    """A = x - y with x, y PSD and x y = 0 (complementary supports)."""

    x: np.ndarray
    y: np.ndarray
    s_plus: float
    s_minus: float
    n_plus: int
    n_minus: int
    n_zero: int


def psd_split(a):
    spectrum = eigendecompose(a)
    w = spectrum.eigenvalues
    v = spectrum.eigenvectors
    eps = spectrum.zero_threshold
    pos = w > eps
    neg = w < -eps

    def part(mask, sign):
        vp = v[:, mask]
        m = (vp * (sign * w[mask])) @ vp.T
        return (m + m.T) / 2.0

    x = part(pos, 1.0)
    y = part(neg, -1.0)
    s_plus, s_minus = squared_energies(spectrum)
    return SpectralSplit(
        x, y, s_plus, s_minus,
        int(np.sum(pos)), int(np.sum(neg)),
        int(spectrum.dim - np.sum(pos) - np.sum(neg)),
    )


def block_frobenius(a, partition):
    """Matrix of squared Frobenius norms of the blocks of a under an
    index partition: entry (u, v) is the squared mass of block (u, v)."""
    arr = check_symmetric(a)
    if not isinstance(partition, HPartition):
        raise TypeError("partition must be an HPartition")
    if partition.source_size != arr.shape[0]:
        raise ValueError(
            f"partition covers {partition.source_size} indices but the "
            f"matrix has dimension {arr.shape[0]}"
        )
    k = partition.target.n
    sq = arr * arr
    idx = [partition.indices_of(u) for u in range(k)]
    out = np.zeros((k, k), dtype=np.float64)
    for u in range(k):
        for v in range(u, k):
            if idx[u] and idx[v]:
                s = float(sq[np.ix_(idx[u], idx[v])].sum())
            else:
                s = 0.0
            out[u, v] = s
            out[v, u] = s
    return out
