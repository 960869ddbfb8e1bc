"""Laplacian spectrum metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError

ZERO_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # ascending
    zero_tolerance: float
    zero_count: int
    nonzero_count: int
    largest: float


def laplacian_spectrum(L: np.ndarray, zero_tolerance: float = ZERO_TOLERANCE) -> Spectrum:
    """All eigenvalues of a graph Laplacian, with zero/non-zero counts.

    An eigenvalue is treated as zero when
    ``|lam| <= max(zero_tolerance, zero_tolerance * lam_max)``; values that
    are zero by that test are clamped to exactly 0.

    Uses LAPACK's symmetric divide-and-conquer solver through
    :func:`numpy.linalg.eigvalsh`.
    """
    if zero_tolerance <= 0:
        raise ValueError("zero_tolerance must be positive")
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise ValueError("Laplacian must be square")
    if not np.array_equal(L, L.T):
        raise ValueError("Laplacian must be symmetric")
    n = L.shape[0]
    if n == 0:
        return Spectrum(np.empty(0), zero_tolerance, 0, 0, 0.0)
    try:
        lam = np.linalg.eigvalsh(L)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from exc
    if not np.all(np.isfinite(lam)):
        raise NumericalError("eigensolver returned non-finite values")
    lam = np.sort(lam)
    cutoff = max(zero_tolerance, zero_tolerance * lam[-1])
    zero = np.abs(lam) <= cutoff
    if np.any(lam < -cutoff):
        raise NumericalError(f"negative eigenvalue {lam[0]!r}; not a Laplacian?")
    lam[zero] = 0.0
    zero_count = int(zero.sum())
    return Spectrum(lam, zero_tolerance, zero_count, n - zero_count, float(lam[-1]))


def count_nonzero_eigenvalues(s: Spectrum) -> int:
    return s.nonzero_count


def spectral_component_count(s: Spectrum) -> int:
    """Multiplicity of the zero eigenvalue, i.e. the number of connected components."""
    return s.zero_count


def largest_eigenvalue(s: Spectrum) -> float:
    return s.largest
