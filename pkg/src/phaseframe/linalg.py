"""Dense complex linear algebra helpers.

Everything downstream manipulates small (at most 64 x 64) complex matrices, so
these are thin, tolerance-aware wrappers around numpy. Matrices are plain
``numpy.ndarray`` values with dtype complex128, i.e. row-major (re, im) double
pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonSquare, NotHermitian, ShapeMismatch

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_matrix",
    "dagger",
    "require_hermitian",
    "herm_eigenvalues",
    "is_psd",
    "trace_inner",
    "tensor",
    "hermitian_basis",
    "herm_coords",
    "herm_from_coords",
]


@dataclass(frozen=True)
class Tolerance:
    """Absolute-plus-relative tolerance used by every numerical predicate."""

    atol: float = 1e-9
    rtol: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("atol", "rtol"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
            object.__setattr__(self, name, value)

    def band(self, scale: float = 1.0) -> float:
        """Acceptance band width for a quantity of the given magnitude."""
        return self.atol + self.rtol * abs(scale)


DEFAULT_TOL = Tolerance()


def max_abs(m: np.ndarray) -> float:
    """Largest entry magnitude; 0 for an empty array."""
    arr = np.asarray(m)
    return float(np.max(np.abs(arr))) if arr.size else 0.0


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2-d complex128 array."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeMismatch(f"expected a nonempty 2-d matrix, got shape {arr.shape}")
    return arr


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def require_square(m) -> np.ndarray:
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {arr.shape}")
    return arr


def require_hermitian(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Validate Hermiticity within tolerance and return the coerced matrix."""
    arr = require_square(m)
    residual = max_abs(arr - arr.conj().T)
    if residual > tol.band(max_abs(arr)):
        raise NotHermitian(
            f"matrix deviates from Hermitian by {residual:.3e} "
            f"(band {tol.band(max_abs(arr)):.3e})"
        )
    return arr


def herm_eigenvalues(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """All real eigenvalues of a Hermitian matrix, sorted ascending."""
    arr = require_hermitian(m, tol)
    return np.linalg.eigvalsh(arr)


def is_psd(m, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    """Positive-semidefiniteness verdict plus the minimum eigenvalue.

    The verdict allows a small negative slack, ``-(atol + rtol * max|eig|)``,
    so that rounding on true boundary cases does not produce false negatives.
    """
    eigs = herm_eigenvalues(m, tol)
    min_eig = float(eigs[0])
    scale = float(np.max(np.abs(eigs)))
    return min_eig >= -tol.band(scale), min_eig


def trace_inner(a, b) -> complex:
    """Trace inner product Tr(a b) of two equal-size square matrices."""
    arr_a = as_matrix(a)
    arr_b = as_matrix(b)
    if arr_a.shape[0] != arr_a.shape[1] or arr_b.shape != arr_a.shape:
        raise DimensionMismatch(
            f"trace inner product needs equal square shapes, got {arr_a.shape} and {arr_b.shape}"
        )
    return complex(np.einsum("ij,ji->", arr_a, arr_b))


def tensor(a, b) -> np.ndarray:
    """Kronecker product; the index of the first factor varies slower."""
    return np.kron(as_matrix(a), as_matrix(b))


def hermitian_basis(d: int) -> list[np.ndarray]:
    """Orthonormal basis of the real space of d x d Hermitian matrices.

    Ordering: the d diagonal matrix units, then (E_kl + E_lk)/sqrt(2) for all
    k < l in lexicographic order, then i(E_kl - E_lk)/sqrt(2) likewise. This
    ordering matches :func:`herm_coords` / :func:`herm_from_coords`.
    """
    basis: list[np.ndarray] = []
    for k in range(d):
        e = np.zeros((d, d), dtype=np.complex128)
        e[k, k] = 1.0
        basis.append(e)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for k in range(d):
        for l in range(k + 1, d):
            e = np.zeros((d, d), dtype=np.complex128)
            e[k, l] = inv_sqrt2
            e[l, k] = inv_sqrt2
            basis.append(e)
    for k in range(d):
        for l in range(k + 1, d):
            e = np.zeros((d, d), dtype=np.complex128)
            e[k, l] = 1j * inv_sqrt2
            e[l, k] = -1j * inv_sqrt2
            basis.append(e)
    return basis


def herm_coords(m: np.ndarray) -> np.ndarray:
    """Real coordinates of a Hermitian matrix in :func:`hermitian_basis` order."""
    arr = as_matrix(m)
    d = arr.shape[0]
    iu = np.triu_indices(d, k=1)
    sqrt2 = np.sqrt(2.0)
    return np.concatenate(
        [
            np.real(np.diagonal(arr)),
            sqrt2 * np.real(arr[iu]),
            sqrt2 * np.imag(arr[iu]),
        ]
    )


def herm_from_coords(coords: np.ndarray, d: int) -> np.ndarray:
    """Inverse of :func:`herm_coords`."""
    vec = np.asarray(coords, dtype=float)
    if vec.shape != (d * d,):
        raise ShapeMismatch(f"expected {d * d} coordinates, got shape {vec.shape}")
    out = np.zeros((d, d), dtype=np.complex128)
    out[np.diag_indices(d)] = vec[:d]
    iu = np.triu_indices(d, k=1)
    n_off = iu[0].size
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    upper = inv_sqrt2 * (vec[d : d + n_off] + 1j * vec[d + n_off :])
    out[iu] = upper
    out[(iu[1], iu[0])] = upper.conj()
    return out
