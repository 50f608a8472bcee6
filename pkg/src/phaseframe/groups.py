"""Finite abelian groups as products of cyclic factors.

Provides element arithmetic over residue tuples, the irreducible characters,
the group Fourier transform, and the classical positivity test that decides
whether a function on the group is the characteristic function of a
probability mass function.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import GroupMismatch, InternalInconsistency, InvalidOrder
from .linalg import DEFAULT_TOL, Tolerance, is_psd, max_abs

__all__ = [
    "FiniteAbelianGroup",
    "make_group",
    "character_value",
    "character_table",
    "fourier_forward",
    "fourier_inverse",
    "translate_matrix",
    "ClassicalBochnerResult",
    "classical_bochner_check",
]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product Z_n1 x ... x Z_nk with lexicographic element enumeration.

    Elements are tuples of residues, residue i in [0, n_i). The empty product
    is the trivial one-element group; it exists only as the neutral factor for
    tensor constructions.
    """

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(int(n) for n in self.orders)
        for n in orders:
            if n < 2:
                raise InvalidOrder(f"cyclic factor order must be >= 2, got {n}")
        object.__setattr__(self, "orders", orders)
        elements = tuple(itertools.product(*(range(n) for n in orders)))
        object.__setattr__(self, "_elements", elements)
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(elements)})

        n = len(elements)
        k = len(orders)
        res = np.array(elements, dtype=np.int64).reshape(n, k)
        ordv = np.array(orders, dtype=np.int64)
        # Place values of the lexicographic index: weight[i] = prod(orders[i+1:]).
        weight = np.ones(k, dtype=np.int64)
        for i in range(k - 2, -1, -1):
            weight[i] = weight[i + 1] * orders[i + 1]
        if k:
            mul = ((res[:, None, :] + res[None, :, :]) % ordv) @ weight
            diff = ((res[None, :, :] - res[:, None, :]) % ordv) @ weight
            inv = ((-res) % ordv) @ weight
        else:
            mul = np.zeros((1, 1), dtype=np.int64)
            diff = np.zeros((1, 1), dtype=np.int64)
            inv = np.zeros(1, dtype=np.int64)
        object.__setattr__(self, "_residues", res)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "_diff", diff)
        object.__setattr__(self, "_inv", inv)

    @property
    def size(self) -> int:
        return len(self._elements)

    @property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return self._elements

    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def element(self, residues) -> tuple[int, ...]:
        """Canonical (mod-reduced) element tuple; raises GroupMismatch on wrong arity."""
        t = tuple(int(r) for r in residues)
        if len(t) != len(self.orders):
            raise GroupMismatch(
                f"element has {len(t)} residues, group has {len(self.orders)} factors"
            )
        return tuple(r % n for r, n in zip(t, self.orders))

    def index(self, g) -> int:
        return self._index[self.element(g)]

    def compose(self, g, h) -> tuple[int, ...]:
        a = self.element(g)
        b = self.element(h)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def inverse(self, g) -> tuple[int, ...]:
        a = self.element(g)
        return tuple((-x) % n for x, n in zip(a, self.orders))


def make_group(orders) -> FiniteAbelianGroup:
    """Group with the given cyclic factor orders (each >= 2), as given."""
    return FiniteAbelianGroup(tuple(int(n) for n in orders))


def _root_exponents(group: FiniteAbelianGroup) -> tuple[np.ndarray, int]:
    """Integer exponent matrix K and common order L with chi_j(g) = exp(-2 pi i K[j,g] / L)."""
    if not group.orders:
        return np.zeros((1, 1), dtype=np.int64), 1
    L = math.lcm(*group.orders)
    res = group._residues
    w = np.array([L // n for n in group.orders], dtype=np.int64)
    K = ((res * w) @ res.T) % L
    return K, L


def character_value(group: FiniteAbelianGroup, j, g) -> complex:
    """Irreducible character chi_j(g) = prod_i exp(-2 pi i j_i g_i / n_i)."""
    jt = group.element(j)
    gt = group.element(g)
    if not group.orders:
        return 1.0 + 0.0j
    L = math.lcm(*group.orders)
    k = sum(ji * gi * (L // n) for ji, gi, n in zip(jt, gt, group.orders)) % L
    if k == 0:
        return 1.0 + 0.0j
    return complex(np.exp(-2j * np.pi * k / L))


def character_table(group: FiniteAbelianGroup) -> np.ndarray:
    """|G| x |G| table with entry [j, g] = chi_j(g); table / sqrt(|G|) is unitary."""
    K, L = _root_exponents(group)
    roots = np.exp(-2j * np.pi * np.arange(L) / L)
    return roots[K]


def _as_group_values(group: FiniteAbelianGroup, values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.shape != (group.size,):
        raise GroupMismatch(
            f"function has {arr.shape} values, group has {group.size} elements"
        )
    return arr


def fourier_forward(group: FiniteAbelianGroup, values) -> np.ndarray:
    """Fourier transform f~_j = (1/|G|) sum_g chi_j(g) f_g, indexed by the dual."""
    arr = _as_group_values(group, values)
    return character_table(group) @ arr / group.size


def fourier_inverse(group: FiniteAbelianGroup, values) -> np.ndarray:
    """Inverse transform f_g = sum_j conj(chi_j(g)) f~_j."""
    arr = _as_group_values(group, values)
    return character_table(group).conj().T @ arr


def translate_matrix(group: FiniteAbelianGroup, values) -> np.ndarray:
    """|G| x |G| matrix T with T[g, g'] = f(g' g^-1).

    T is Hermitian whenever f(g^-1) = conj(f(g)), and its eigenvalues are
    |G| times the Fourier coefficients of f, so T >= 0 exactly when the
    Fourier transform of f is entrywise nonnegative.
    """
    arr = _as_group_values(group, values)
    return arr[group._diff]


@dataclass(frozen=True, eq=False)
class ClassicalBochnerResult:
    """Outcome of the classical characteristic-function test."""

    accepted: bool
    mu: np.ndarray
    min_mu: float
    translate_min_eig: float
    identity_residual: float
    symmetry_residual: float


def classical_bochner_check(
    group: FiniteAbelianGroup, phi, tol: Tolerance = DEFAULT_TOL
) -> ClassicalBochnerResult:
    """Decide whether phi is the characteristic function of a probability mass function.

    Accepts exactly when phi(e) = 1 and the translate matrix of phi is positive
    semidefinite (both within tolerance). The returned ``mu`` is the Fourier
    transform of phi; on acceptance it is cross-checked to be a valid pmf and a
    violation raises InternalInconsistency, since the two computations are
    mathematically equivalent.
    """
    arr = _as_group_values(group, phi)
    scale = max_abs(arr)
    band = tol.band(scale)

    symmetry_residual = float(np.max(np.abs(arr[group._inv] - arr.conj()))) if arr.size else 0.0
    identity_residual = abs(arr[0] - 1.0)
    symmetric = symmetry_residual <= band
    normalized = identity_residual <= tol.band(1.0)

    mu_complex = fourier_forward(group, arr)
    mu = mu_complex.real.copy()
    min_mu = float(np.min(mu))

    if symmetric:
        psd, translate_min_eig = is_psd(translate_matrix(group, arr), tol)
    else:
        psd, translate_min_eig = False, float("nan")

    accepted = symmetric and normalized and psd
    if accepted:
        mu_band = 10.0 * tol.band(max(1.0, max_abs(mu_complex)))
        if (
            min_mu < -mu_band
            or abs(np.sum(mu_complex) - 1.0) > mu_band
            or float(np.max(np.abs(mu_complex.imag))) > mu_band
        ):
            raise InternalInconsistency(
                "translate matrix accepted but Fourier coefficients are not a pmf; "
                f"min mu = {min_mu:.3e}, sum = {np.sum(mu_complex):.12g}"
            )
    return ClassicalBochnerResult(
        accepted=accepted,
        mu=mu,
        min_mu=min_mu,
        translate_min_eig=float(translate_min_eig),
        identity_residual=float(identity_residual),
        symmetry_residual=float(symmetry_residual),
    )
