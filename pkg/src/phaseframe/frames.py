"""Projective frames: unitary operator families indexed by a finite abelian group.

A projective frame maps each group element g to a unitary P_g with

* P_e = identity,
* P_g P_g' = alpha(g, g') P_{gg'} for a unit-modulus scalar 2-cocycle alpha,
* P_g^-1 = P_{g^-1} (equivalently alpha(g, g^-1) = 1),
* the operators span the full matrix space.

These conventions make the group-Fourier transform of the frame a family of
Hermitian operators, which is what turns the frame into a quasi-probability
representation. Constructors here cover the shift/clock (Weyl) frames for odd
dimension, the qubit sign-class frames, tensor products, and two unfaithful
frames: the doubled phase space for even dimension and the Z2^3 example.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

from .errors import (
    DimensionMismatch,
    EvenDimension,
    GroupMismatch,
    InternalInconsistency,
    InvalidDimension,
    NotAFrame,
    NotProjective,
)
from .groups import FiniteAbelianGroup, make_group
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    herm_coords,
    max_abs,
    require_hermitian,
)

__all__ = [
    "ProjectiveFrame",
    "CocycleTable",
    "gen_pauli",
    "weyl_frame",
    "qubit_frame",
    "tensor_frame",
    "trivial_frame",
    "z2cubed_frame",
    "leonhardt_frame",
    "phase_fix",
    "cocycle_table",
    "kernel",
    "is_faithful",
    "frame_bounds",
    "validate_frame",
    "frame_report",
]


# --------------------------------------------------------------------------
# core types


@dataclass(frozen=True, eq=False)
class ProjectiveFrame:
    """Immutable bundle of a group and one unitary per group element.

    ``operators[i]`` corresponds to ``group.elements[i]`` (lexicographic
    order). ``metadata`` records how the frame was built, for serialization.
    """

    group: FiniteAbelianGroup
    operators: tuple[np.ndarray, ...]
    dim: int
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ops = tuple(as_matrix(op) for op in self.operators)
        if len(ops) != self.group.size:
            raise GroupMismatch(
                f"{len(ops)} operators for a group of size {self.group.size}"
            )
        for op in ops:
            if op.shape != (self.dim, self.dim):
                raise DimensionMismatch(
                    f"operator shape {op.shape} does not match dim {self.dim}"
                )
            op.setflags(write=False)
        object.__setattr__(self, "operators", ops)
        object.__setattr__(self, "metadata", dict(self.metadata))

    def operator(self, g) -> np.ndarray:
        return self.operators[self.group.index(g)]

    def stack(self) -> np.ndarray:
        return np.stack(self.operators)


@dataclass(frozen=True, eq=False)
class CocycleTable:
    """Scalar multiplication defects alpha(g, g') of a projective frame."""

    group: FiniteAbelianGroup
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.complex128)
        n = self.group.size
        if arr.shape != (n, n):
            raise GroupMismatch(f"cocycle table shape {arr.shape}, group size {n}")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def value(self, g, h) -> complex:
        return complex(self.values[self.group.index(g), self.group.index(h)])


# --------------------------------------------------------------------------
# elementary building blocks


def _shift_matrix(d: int, j: int) -> np.ndarray:
    """j-th power of the cyclic shift |k> -> |k+1 mod d>, built exactly."""
    m = np.zeros((d, d), dtype=np.complex128)
    cols = np.arange(d)
    m[(cols + j) % d, cols] = 1.0
    return m


def _clock_matrix(d: int, l: int) -> np.ndarray:
    """l-th power of the clock matrix diag(omega^k), omega = exp(-2 pi i / d)."""
    roots = np.exp(-2j * np.pi * np.arange(d) / d)
    return np.diag(roots[(np.arange(d) * l) % d])


def gen_pauli(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Generalized Pauli pair (X, Z) in dimension d.

    Z = diag(1, omega, ..., omega^{d-1}) with omega = exp(-2 pi i / d) and X
    the cyclic shift |k> -> |k+1 mod d>, so that Z X = omega X Z and
    X^d = Z^d = identity.
    """
    if int(d) != d or d < 2:
        raise InvalidDimension(f"generalized Pauli matrices need integer d >= 2, got {d}")
    return _shift_matrix(d, 1), _clock_matrix(d, 1)


# --------------------------------------------------------------------------
# invariant checks


def _unitarity_residual(ops: tuple[np.ndarray, ...]) -> float:
    d = ops[0].shape[0]
    eye = np.eye(d)
    return max(max_abs(op.conj().T @ op - eye) for op in ops)


def _identity_residual(ops: tuple[np.ndarray, ...], d: int) -> float:
    return max_abs(ops[0] - np.eye(d))


def _inverse_residual(group: FiniteAbelianGroup, ops: tuple[np.ndarray, ...]) -> float:
    inv = group._inv
    return max(max_abs(ops[a].conj().T - ops[inv[a]]) for a in range(group.size))


def _extract_cocycle(
    group: FiniteAbelianGroup, ops: tuple[np.ndarray, ...]
) -> tuple[np.ndarray, float]:
    """Best-fit scalars alpha(g, g') and the worst residual |P_g P_g' - alpha P_{gg'}|."""
    n = group.size
    d = ops[0].shape[0]
    stack = np.stack(ops)
    mul = group._mul
    values = np.empty((n, n), dtype=np.complex128)
    residual = 0.0
    for a in range(n):
        prod = ops[a] @ stack  # (n, d, d)
        target = stack[mul[a]]
        # alpha = <target, prod> / <target, target>; targets are unitary, norm^2 = d.
        alpha = np.einsum("nij,nij->n", target.conj(), prod) / d
        values[a] = alpha
        residual = max(residual, max_abs(prod - alpha[:, None, None] * target))
    return values, residual


def _cocycle_identity_residual(group: FiniteAbelianGroup, values: np.ndarray) -> float:
    """Worst violation of alpha(a,b) alpha(ab,c) = alpha(b,c) alpha(a,bc) over all triples."""
    mul = group._mul
    lhs = values[:, :, None] * values[mul, :]
    rhs = values[None, :, :] * values[:, mul]
    return float(np.max(np.abs(lhs - rhs)))


def _spanning_svals(ops: tuple[np.ndarray, ...]) -> np.ndarray:
    d = ops[0].shape[0]
    flat = np.stack(ops).reshape(len(ops), d * d)
    return np.linalg.svd(flat, compute_uv=False)


def validate_frame(frame: ProjectiveFrame, tol: Tolerance = DEFAULT_TOL) -> None:
    """Run the full invariant suite; raises on the first violated invariant."""
    ops = frame.operators
    band = tol.band(1.0)

    r = _unitarity_residual(ops)
    if r > band:
        raise NotProjective(f"operator not unitary: residual {r:.3e} exceeds {band:.3e}")
    r = _identity_residual(ops, frame.dim)
    if r > band:
        raise NotProjective(f"identity element maps to a non-identity operator (residual {r:.3e})")
    r = _inverse_residual(frame.group, ops)
    if r > band:
        raise NotProjective(
            f"inverse convention violated: P(g)^-1 != P(g^-1), residual {r:.3e}"
        )
    values, r = _extract_cocycle(frame.group, ops)
    if r > band:
        raise NotProjective(f"products leave the frame up to scalars: residual {r:.3e}")
    r = float(np.max(np.abs(np.abs(values) - 1.0)))
    if r > band:
        raise NotProjective(f"cocycle has non-unimodular values (residual {r:.3e})")
    inv = frame.group._inv
    r = float(np.max(np.abs(values[np.arange(frame.group.size), inv] - 1.0)))
    if r > band:
        raise NotProjective(f"alpha(g, g^-1) != 1 (residual {r:.3e})")
    r = _cocycle_identity_residual(frame.group, values)
    if r > band:
        raise NotProjective(f"2-cocycle identity violated (residual {r:.3e})")

    svals = _spanning_svals(ops)
    d2 = frame.dim * frame.dim
    if len(ops) < d2 or svals[d2 - 1] <= tol.band(float(svals[0])):
        raise NotAFrame(
            f"operators span only {int(np.sum(svals > tol.band(float(svals[0]))))} of "
            f"{d2} matrix dimensions"
        )


# --------------------------------------------------------------------------
# constructors


def weyl_frame(d: int, tol: Tolerance = DEFAULT_TOL) -> ProjectiveFrame:
    """Shift/clock frame over Z_d x Z_d for odd d >= 3.

    P_(j,l) = omega^{s j l} X^j Z^l with s = (d+1)/2, the multiplicative
    inverse of 2 mod d. The phase makes P_(j,l) a d-th root of unity times a
    unitary with P_g^-1 = P_{g^-1}; it has no analogue for even d, where the
    doubled phase space of :func:`leonhardt_frame` applies instead.
    """
    if int(d) != d or d < 2:
        raise InvalidDimension(f"need integer d >= 3, got {d}")
    if d % 2 == 0:
        raise EvenDimension(
            f"no half-integer phase exists for even d = {d}; use leonhardt_frame(d) "
            "or a tensor product of smaller frames"
        )
    group = make_group([d, d])
    s = (d + 1) // 2
    roots = np.exp(-2j * np.pi * np.arange(d) / d)
    ops = tuple(
        roots[(s * j * l) % d] * (_shift_matrix(d, j) @ _clock_matrix(d, l))
        for (j, l) in group.elements
    )
    frame = ProjectiveFrame(
        group=group,
        operators=ops,
        dim=d,
        metadata={"kind": "weyl", "parameters": {"d": int(d)}},
    )
    validate_frame(frame, tol)
    return frame


_PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def qubit_frame(signs=(1, 1, 1), tol: Tolerance = DEFAULT_TOL) -> ProjectiveFrame:
    """Qubit frame over Z_2 x Z_2 with signed Pauli operators.

    ``signs`` gives the +-1 prefactors of X, Z and Y at group elements (1,0),
    (0,1) and (1,1). All four operators are Hermitian and self-inverse, so the
    inverse convention holds automatically. The parity sign(X)*sign(Z)*sign(Y)
    is recorded in the metadata; it separates the two equivalence classes of
    qubit phase-space representations (flipping an even number of signs can be
    undone by a unitary, flipping an odd number cannot).
    """
    sx, sz, sy = (int(s) for s in signs)
    for s in (sx, sz, sy):
        if s not in (1, -1):
            raise InvalidDimension(f"signs must be +1 or -1, got {signs!r}")
    group = make_group([2, 2])
    by_element = {
        (0, 0): np.eye(2, dtype=np.complex128),
        (1, 0): sx * _PAULI_X,
        (0, 1): sz * _PAULI_Z,
        (1, 1): sy * _PAULI_Y,
    }
    parity = sx * sz * sy
    frame = ProjectiveFrame(
        group=group,
        operators=tuple(by_element[g] for g in group.elements),
        dim=2,
        metadata={"kind": "qubit", "parameters": {"signs": [sx, sz, sy], "parity": parity}},
    )
    validate_frame(frame, tol)
    return frame


def trivial_frame() -> ProjectiveFrame:
    """One-element frame on a one-dimensional space; neutral for tensor products."""
    return ProjectiveFrame(
        group=FiniteAbelianGroup(()),
        operators=(np.eye(1, dtype=np.complex128),),
        dim=1,
        metadata={"kind": "trivial", "parameters": {}},
    )


def tensor_frame(
    a: ProjectiveFrame, b: ProjectiveFrame, tol: Tolerance = DEFAULT_TOL
) -> ProjectiveFrame:
    """Kronecker product frame over the direct product group.

    The product group concatenates the factor order lists; element (g, h) maps
    to P_g (x) Q_h, and the cocycle is the product of the factor cocycles.
    """
    group = FiniteAbelianGroup(a.group.orders + b.group.orders)
    ops = tuple(
        np.kron(op_a, op_b) for op_a in a.operators for op_b in b.operators
    )
    frame = ProjectiveFrame(
        group=group,
        operators=ops,
        dim=a.dim * b.dim,
        metadata={
            "kind": "tensor",
            "parameters": {"factors": [dict(a.metadata), dict(b.metadata)]},
        },
    )
    validate_frame(frame, tol)
    return frame


def z2cubed_frame(tol: Tolerance = DEFAULT_TOL) -> ProjectiveFrame:
    """Unfaithful qubit frame over Z_2^3; each Pauli appears at two elements.

    (0,0,0) and (1,0,0) map to the identity, (0,0,1) and (1,0,1) to X,
    (0,1,0) and (1,1,0) to Z, (0,1,1) and (1,1,1) to Y, so the kernel is
    {(0,0,0), (1,0,0)} and the frame is a doubly redundant Pauli basis.
    """
    group = make_group([2, 2, 2])
    by_tail = {
        (0, 0): np.eye(2, dtype=np.complex128),
        (0, 1): _PAULI_X,
        (1, 0): _PAULI_Z,
        (1, 1): _PAULI_Y,
    }
    ops = tuple(by_tail[(g[1], g[2])] for g in group.elements)
    frame = ProjectiveFrame(
        group=group,
        operators=ops,
        dim=2,
        metadata={"kind": "z2cubed", "parameters": {}},
    )
    validate_frame(frame, tol)
    return frame


def leonhardt_frame(d: int, tol: Tolerance = DEFAULT_TOL) -> ProjectiveFrame:
    """Doubled phase-space frame over Z_2d x Z_2d for any d >= 2.

    P_(j,l) = tau^{j l} X^{j mod d} Z^{l mod d} with tau = exp(-i pi / d), a
    primitive 2d-th root of unity, so phases live mod 2d while matrix powers
    reduce mod d. Doubling the index group is what restores the inverse
    convention in even dimension. The frame is unfaithful: the kernel contains
    the four elements with both residues in {0, d}.
    """
    if int(d) != d or d < 2:
        raise InvalidDimension(f"need integer d >= 2, got {d}")
    group = make_group([2 * d, 2 * d])
    tau = np.exp(-1j * np.pi * np.arange(2 * d) / d)
    ops = tuple(
        tau[(j * l) % (2 * d)] * (_shift_matrix(d, j % d) @ _clock_matrix(d, l % d))
        for (j, l) in group.elements
    )
    if _inverse_residual(group, ops) > tol.band(1.0):
        # The direct phase choice already satisfies the convention for this
        # commutation sign; rephasing is kept as a guard for future variants.
        fixed = phase_fix(group, ops, tol)
        ops = fixed.operators
    frame = ProjectiveFrame(
        group=group,
        operators=ops,
        dim=d,
        metadata={"kind": "leonhardt", "parameters": {"d": int(d)}},
    )
    validate_frame(frame, tol)
    return frame


def phase_fix(
    group: FiniteAbelianGroup,
    operators,
    tol: Tolerance = DEFAULT_TOL,
    metadata: Mapping[str, Any] | None = None,
) -> ProjectiveFrame:
    """Rephase a raw projective representation so that P(g)^-1 = P(g^-1).

    The input must be unitary, send the identity element to the identity
    matrix, and be projective (products scalar-equivalent to members).
    For each pair {g, g^-1} with g != g^-1 the lexicographically smaller
    element keeps phase 1 and its partner absorbs the correction; self-inverse
    elements take the principal square root of their correction. The output is
    projectively equivalent to the input (per-element unit scalars only).
    """
    ops = tuple(as_matrix(op) for op in operators)
    if len(ops) != group.size:
        raise GroupMismatch(f"{len(ops)} operators for a group of size {group.size}")
    d = ops[0].shape[0]
    band = tol.band(1.0)
    if _unitarity_residual(ops) > band:
        raise NotProjective("phase_fix input contains non-unitary operators")
    if _identity_residual(ops, d) > band:
        raise NotProjective("phase_fix input does not map the identity element to I")
    values, residual = _extract_cocycle(group, ops)
    if residual > band:
        raise NotProjective(
            f"phase_fix input is not projective: scalar residual {residual:.3e}"
        )

    inv = group._inv
    mu = np.ones(group.size, dtype=np.complex128)
    for a in range(group.size):
        b = int(inv[a])
        alpha_pair = values[a, b]  # alpha(g, g^-1)
        if a < b:
            mu[b] = alpha_pair.conj()
        elif a == b and a != 0:
            mu[a] = np.sqrt(alpha_pair.conj())
    fixed = tuple(mu[a] * ops[a] for a in range(group.size))
    frame = ProjectiveFrame(
        group=group,
        operators=fixed,
        dim=d,
        metadata=dict(metadata) if metadata is not None else {"kind": "phase_fixed", "parameters": {}},
    )
    validate_frame(frame, tol)
    return frame


# --------------------------------------------------------------------------
# derived data


def cocycle_table(frame: ProjectiveFrame, tol: Tolerance = DEFAULT_TOL) -> CocycleTable:
    """Extract alpha(g, g') = Tr(P_g P_g' P_{gg'}^dag) / d and verify its invariants."""
    values, residual = _extract_cocycle(frame.group, frame.operators)
    band = tol.band(1.0)
    if residual > band:
        raise NotProjective(f"operators are not projective: residual {residual:.3e}")
    n = frame.group.size
    checks = [
        (float(np.max(np.abs(np.abs(values) - 1.0))), "cocycle modulus differs from 1"),
        (float(np.max(np.abs(values[0, :] - 1.0))), "alpha(e, g) != 1"),
        (float(np.max(np.abs(values[:, 0] - 1.0))), "alpha(g, e) != 1"),
        (
            float(np.max(np.abs(values[np.arange(n), frame.group._inv] - 1.0))),
            "alpha(g, g^-1) != 1",
        ),
        (_cocycle_identity_residual(frame.group, values), "2-cocycle identity violated"),
    ]
    for value, message in checks:
        if value > band:
            raise NotProjective(f"{message} (residual {value:.3e})")
    return CocycleTable(group=frame.group, values=values)


def kernel(frame: ProjectiveFrame, tol: Tolerance = DEFAULT_TOL) -> list[tuple[int, ...]]:
    """Group elements mapped to a unit scalar times the identity, as a verified subgroup."""
    band = tol.band(1.0)
    d = frame.dim
    eye = np.eye(d)
    members: list[int] = []
    for idx, op in enumerate(frame.operators):
        c = np.trace(op) / d
        if abs(abs(c) - 1.0) <= band and max_abs(op - c * eye) <= band:
            members.append(idx)
    member_set = set(members)
    mul = frame.group._mul
    for a in members:
        for b in members:
            if int(mul[a, b]) not in member_set:
                raise InternalInconsistency(
                    "kernel candidates are not closed under composition"
                )
    return [frame.group.elements[i] for i in members]


def is_faithful(frame: ProjectiveFrame, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when only the identity element maps to a scalar matrix."""
    return kernel(frame, tol) == [frame.group.identity()]


def frame_bounds(ops, tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """Extreme eigenvalues (a, b) of the frame operator of Hermitian operators.

    The frame operator is S = sum_k |F_k><F_k| on the d^2-dimensional real
    space of Hermitian matrices; the set is a frame exactly when a > 0.
    """
    matrices = [require_hermitian(op, tol) for op in ops]
    if not matrices:
        raise DimensionMismatch("frame_bounds needs at least one operator")
    d = matrices[0].shape[0]
    for op in matrices:
        if op.shape != (d, d):
            raise DimensionMismatch(
                f"mixed operator shapes {op.shape} and {(d, d)} in frame_bounds"
            )
    coords = np.stack([herm_coords(op) for op in matrices])
    gram = coords.T @ coords
    eigs = np.linalg.eigvalsh(gram)
    return float(eigs[0]), float(eigs[-1])


def frame_report(frame: ProjectiveFrame, tol: Tolerance = DEFAULT_TOL) -> dict:
    """Diagnostics for every frame invariant, for verification output.

    Returns a dict with a ``checks`` list of (name, ok, detail) triples, the
    kernel, the faithfulness flag, the Fourier-frame bounds, and an overall
    ``passed`` flag. Tracelessness and Gram orthogonality are required only of
    faithful frames.
    """
    from .representation import build_representation

    band = tol.band(1.0)
    checks: list[tuple[str, bool, str]] = []

    def record(name: str, value: float, limit: float) -> None:
        checks.append((name, value <= limit, f"residual {value:.3e} (limit {limit:.3e})"))

    record("unitarity", _unitarity_residual(frame.operators), band)
    record("identity_at_origin", _identity_residual(frame.operators, frame.dim), band)
    record("inverse_convention", _inverse_residual(frame.group, frame.operators), band)
    values, residual = _extract_cocycle(frame.group, frame.operators)
    record("projectivity", residual, band)
    record("cocycle_modulus", float(np.max(np.abs(np.abs(values) - 1.0))), band)
    n = frame.group.size
    record(
        "cocycle_inverse_pairs",
        float(np.max(np.abs(values[np.arange(n), frame.group._inv] - 1.0))),
        band,
    )
    record("cocycle_identity", _cocycle_identity_residual(frame.group, values), band)

    ker = kernel(frame, tol)
    faithful = ker == [frame.group.identity()]
    checks.append(("kernel_subgroup", True, f"{len(ker)} element(s): {ker}"))
    if faithful:
        traces = [abs(np.trace(op)) for op in frame.operators[1:]]
        record("tracelessness_off_identity", max(traces) if traces else 0.0, 1e-10)
        stack = frame.stack()
        gram = np.einsum("aij,bij->ab", stack.conj(), stack)
        record(
            "gram_orthogonality",
            max_abs(gram - frame.dim * np.eye(n)),
            1e-10,
        )

    rep = build_representation(frame, tol)
    a, b = frame_bounds(rep.fourier_ops, tol)
    spanning_ok = a > tol.band(b)
    checks.append(
        ("fourier_frame_bounds", spanning_ok, f"a = {a:.6g}, b = {b:.6g}")
    )

    return {
        "checks": checks,
        "kernel": ker,
        "faithful": faithful,
        "fourier_frame_bounds": (a, b),
        "passed": all(ok for _, ok, _ in checks),
    }
