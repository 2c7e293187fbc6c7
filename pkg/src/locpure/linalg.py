"""Dense complex linear algebra for small bipartite systems.

All operations work on plain ``numpy.ndarray`` values with ``complex128``
entries, row-major. Dimensions stay small (products of the two local
dimensions up to around 64), so everything is dense and eager.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, NotHermitian

HERMITICITY_TOL = 1e-10
DEFAULT_RANK_TOL = 1e-10


class Dims(NamedTuple):
    """Bipartite dimension pair (Alice's space first)."""

    n_a: int
    n_b: int

    @property
    def total(self) -> int:
        return self.n_a * self.n_b


def as_dims(dims) -> Dims:
    """Coerce a ``(n_a, n_b)`` pair into a validated :class:`Dims`."""
    d = Dims(int(dims[0]), int(dims[1]))
    if d.n_a < 2 or d.n_b < 2:
        raise ValueError(f"both local dimensions must be >= 2, got {tuple(d)}")
    return d


def as_complex_matrix(m) -> np.ndarray:
    """Validate and return ``m`` as a 2-D complex128 array with finite entries."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def tensor_product(m1, m2) -> np.ndarray:
    """Kronecker product with the first factor's indices outermost."""
    return np.kron(as_complex_matrix(m1), as_complex_matrix(m2))


def rank_with_tolerance(m, rel_tol: float = DEFAULT_RANK_TOL) -> int:
    """Number of singular values above ``rel_tol`` times the largest one.

    Returns 0 for the zero matrix.
    """
    if not 0.0 < rel_tol < 1.0:
        raise ValueError(f"rel_tol must lie in (0, 1), got {rel_tol}")
    sv = np.linalg.svd(as_complex_matrix(m), compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > rel_tol * sv[0]))


def hermitian_eigensystem(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, real) and orthonormal eigenvector columns of a
    Hermitian matrix.

    Raises
    ------
    NotHermitian
        If ``m`` deviates from its conjugate transpose by more than
        ``1e-10`` times the largest entry magnitude.
    """
    arr = as_complex_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise NotHermitian(f"matrix is not square: {arr.shape}")
    scale = max(np.abs(arr).max(), 1.0)
    if np.abs(arr - arr.conj().T).max() > HERMITICITY_TOL * scale:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    vals, vecs = np.linalg.eigh(arr)
    return vals, vecs


def partial_transpose(rho, dims, subsystem: str = "B") -> np.ndarray:
    """Transpose only the chosen tensor factor of a bipartite operator.

    ``subsystem`` is ``"A"`` or ``"B"``. Applying the same partial transpose
    twice restores the input.
    """
    d = as_dims(dims)
    arr = _as_bipartite_square(rho, d)
    t = arr.reshape(d.n_a, d.n_b, d.n_a, d.n_b)
    if subsystem.upper() == "A":
        t = t.transpose(2, 1, 0, 3)
    elif subsystem.upper() == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return np.ascontiguousarray(t.reshape(d.total, d.total))


def partial_trace(rho, dims, traced_subsystem: str = "B") -> np.ndarray:
    """Trace out one tensor factor, returning the reduced operator."""
    d = as_dims(dims)
    arr = _as_bipartite_square(rho, d)
    t = arr.reshape(d.n_a, d.n_b, d.n_a, d.n_b)
    if traced_subsystem.upper() == "A":
        return np.ascontiguousarray(np.trace(t, axis1=0, axis2=2))
    if traced_subsystem.upper() == "B":
        return np.ascontiguousarray(np.trace(t, axis1=1, axis2=3))
    raise ValueError(f"traced_subsystem must be 'A' or 'B', got {traced_subsystem!r}")


def operator_norm(m) -> float:
    """Largest singular value."""
    arr = as_complex_matrix(m)
    if arr.size == 0:
        return 0.0
    return float(np.linalg.norm(arr, ord=2))


def hermitize(m) -> np.ndarray:
    """Hermitian part ``(m + m†)/2``; cleans roundoff on conjugated products."""
    arr = as_complex_matrix(m)
    return (arr + arr.conj().T) / 2.0


def _as_bipartite_square(rho, d: Dims) -> np.ndarray:
    arr = as_complex_matrix(rho)
    if arr.shape != (d.total, d.total):
        raise DimensionMismatch(
            f"operator shape {arr.shape} does not match dims {tuple(d)} "
            f"(expected {(d.total, d.total)})"
        )
    return arr
