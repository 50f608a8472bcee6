"""Quasi-probability representations built from projective frames.

The group-Fourier transform of a projective frame is a family of Hermitian
operators F_j indexed by the dual group. Pairing a state with the F_j gives a
real, normalized (but possibly negative) distribution; the canonical dual
frame inverts the map. The module also carries the direct convolution formula
for the odd-dimensional Wigner function of a pure state, used as an
independent oracle for the frame-based route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    EvenDimension,
    InternalInconsistency,
    InvalidDimension,
    NotAFrame,
    NotHermitian,
    NotNormalized,
    ShapeMismatch,
)
from .frames import ProjectiveFrame
from .groups import character_table
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    herm_coords,
    herm_from_coords,
    max_abs,
    require_hermitian,
)

__all__ = [
    "QuasiProbRepresentation",
    "build_representation",
    "represent",
    "characteristic",
    "reconstruct",
    "gross_wigner_pure",
    "gross_as_dual_distribution",
]


@dataclass(frozen=True, eq=False)
class QuasiProbRepresentation:
    """A projective frame with its Fourier frame and canonical dual frame.

    ``fourier_ops[i]`` and ``dual_ops[i]`` are indexed by the dual element
    ``frame.group.elements[i]`` (the dual of a finite abelian group is
    identified with the group itself, in the same lexicographic order).
    """

    frame: ProjectiveFrame
    fourier_ops: tuple[np.ndarray, ...]
    dual_ops: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        for ops in (self.fourier_ops, self.dual_ops):
            for op in ops:
                op.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.frame.dim

    @property
    def group(self):
        return self.frame.group


def build_representation(
    frame: ProjectiveFrame, tol: Tolerance = DEFAULT_TOL
) -> QuasiProbRepresentation:
    """Fourier-transform a projective frame into a quasi-probability representation.

    F_j = (1/|G|) sum_g chi_j(g) P_g. The frame conventions force each F_j to
    be Hermitian; a material deviation means the input violates the inverse
    convention and construction fails loudly. The dual frame applies the
    pseudo-inverse of the frame operator to each F_j, which is the plain
    inverse whenever the F_j span (always, for valid projective frames).
    """
    group = frame.group
    n = group.size
    d = frame.dim
    stack = frame.stack()
    table = character_table(group)
    fourier = np.tensordot(table, stack, axes=([1], [0])) / n

    scale = max(max_abs(f) for f in fourier)
    for j in range(n):
        deviation = max_abs(fourier[j] - fourier[j].conj().T)
        if deviation > 1e-8 * scale:
            raise NotHermitian(
                f"Fourier operator {group.elements[j]} is not Hermitian "
                f"(deviation {deviation:.3e}); the frame violates the inverse convention"
            )
    fourier = 0.5 * (fourier + np.transpose(fourier, (0, 2, 1)).conj())

    coords = np.stack([herm_coords(f) for f in fourier])  # (n, d^2) real
    gram = coords.T @ coords
    eigs = np.linalg.eigvalsh(gram)
    if eigs[0] <= tol.band(float(eigs[-1])):
        raise NotAFrame(
            f"Fourier operators do not span: frame lower bound {eigs[0]:.3e}"
        )
    dual_coords = coords @ np.linalg.pinv(gram)
    resolution = max_abs(coords.T @ dual_coords - np.eye(d * d))
    if resolution > 1e-8:
        raise InternalInconsistency(
            f"dual frame fails the reconstruction identity (residual {resolution:.3e})"
        )

    total = fourier.sum(axis=0)
    if max_abs(total - np.eye(d)) > 10.0 * tol.band(1.0):
        raise InternalInconsistency("Fourier operators do not sum to the identity")

    dual_ops = tuple(herm_from_coords(dual_coords[j], d) for j in range(n))
    return QuasiProbRepresentation(
        frame=frame,
        fourier_ops=tuple(fourier),
        dual_ops=dual_ops,
    )


def _require_state_shape(rep: QuasiProbRepresentation, rho, tol: Tolerance) -> np.ndarray:
    arr = require_hermitian(rho, tol)
    if arr.shape != (rep.dim, rep.dim):
        raise DimensionMismatch(
            f"operator shape {arr.shape} does not match representation dimension {rep.dim}"
        )
    return arr


def represent(
    rep: QuasiProbRepresentation, rho, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Quasi-probability values mu_j = Tr(rho F_j) in dual lexicographic order.

    The values of a Hermitian operator are real up to rounding; the imaginary
    residue is checked and discarded.
    """
    arr = _require_state_shape(rep, rho, tol)
    mu = np.einsum("jab,ba->j", np.stack(rep.fourier_ops), arr)
    imag = float(np.max(np.abs(mu.imag)))
    if imag > 10.0 * tol.band(max(1.0, max_abs(mu))):
        raise InternalInconsistency(
            f"quasi-probability values have imaginary residue {imag:.3e}"
        )
    return mu.real.copy()


def characteristic(
    rep: QuasiProbRepresentation, rho, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Characteristic function phi(g) = Tr(rho P_g) in element lexicographic order."""
    arr = _require_state_shape(rep, rho, tol)
    return np.einsum("gab,ba->g", rep.frame.stack(), arr)


def reconstruct(rep: QuasiProbRepresentation, mu) -> np.ndarray:
    """Operator sum_j mu_j D_j recovering the state represented by mu.

    For mu = represent(rep, rho) this returns rho up to rounding; for
    distributions outside the range of the representation it returns the
    minimum-norm consistent operator.
    """
    values = np.asarray(mu, dtype=float)
    if values.shape != (rep.group.size,):
        raise ShapeMismatch(
            f"distribution has shape {values.shape}, expected ({rep.group.size},)"
        )
    return np.tensordot(values, np.stack(rep.dual_ops), axes=([0], [0]))


# --------------------------------------------------------------------------
# independent oracle: direct Wigner function of a pure state, odd dimension


def gross_wigner_pure(amplitudes, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Wigner table W[q, p] of a normalized pure state in odd dimension d.

    W[q, p] = (1/d) sum_s omega^{-p s} a[q - s/2] conj(a[q + s/2]) with
    omega = exp(-2 pi i / d) and s/2 meaning s (d+1)/2 mod d. Entries are real
    and sum to 1. This route never touches the frame machinery, which makes it
    an independent check of the frame-based distribution.
    """
    a = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    d = a.size
    if d < 2:
        raise InvalidDimension(f"need a state vector of length >= 2, got {d}")
    if d % 2 == 0:
        raise EvenDimension(f"the half-index convolution needs odd d, got {d}")
    norm = float(np.vdot(a, a).real)
    if abs(norm - 1.0) > tol.band(1.0):
        raise NotNormalized(f"state vector norm^2 = {norm!r}, expected 1")
    half = (d + 1) // 2
    q = np.arange(d)[:, None]
    s = np.arange(d)[None, :]
    pairs = a[(q - s * half) % d] * a[(q + s * half) % d].conj()  # [q, s]
    kernel = np.exp(2j * np.pi * np.outer(np.arange(d), np.arange(d)) / d)  # [s, p]
    table = pairs @ kernel / d
    imag = float(np.max(np.abs(table.imag)))
    if imag > 10.0 * tol.band(1.0):
        raise InternalInconsistency(f"Wigner table has imaginary residue {imag:.3e}")
    return table.real.copy()


def gross_as_dual_distribution(amplitudes, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Wigner table of a pure state reordered to match :func:`represent`.

    The fixed bijection sends the dual index (a, b) of the Z_d x Z_d frame to
    the phase-space point (q, p) = (-b mod d, -a mod d). It was pinned once by
    matching the distributions of a basis state and a quadratic-phase state
    and is frozen here; any fixed relabeling of the index set is equally valid.
    """
    table = gross_wigner_pure(amplitudes, tol)
    d = table.shape[0]
    out = np.empty(d * d, dtype=float)
    for a in range(d):
        for b in range(d):
            out[a * d + b] = table[(-b) % d, (-a) % d]
    return out
