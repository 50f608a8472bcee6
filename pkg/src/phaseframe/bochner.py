"""Positivity certificates for states expressed through a projective frame.

Two structured |G| x |G| matrices built from the characteristic function
phi(g) = Tr(rho P_g) decide everything:

* the translate matrix M[g, g'] = phi(g' g^-1) is PSD exactly when the
  quasi-probability distribution of rho is entrywise nonnegative;
* the cocycle-twisted translate matrix M[g, g'] = phi(g' g^-1) alpha(g^-1, g')
  is PSD exactly when rho itself is positive semidefinite.

Certificates carry both verdicts together with the direct spectral oracles
(min eigenvalue of rho, min quasi-probability value); a disagreement between
the two routes is reported, never reconciled silently.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    CocycleMismatch,
    NotConjugateSymmetric,
    NotNormalized,
    PhaseFrameError,
    ShapeMismatch,
)
from .frames import CocycleTable, cocycle_table
from .groups import FiniteAbelianGroup, _as_group_values
from .linalg import DEFAULT_TOL, Tolerance, herm_eigenvalues, is_psd, max_abs
from .representation import (
    QuasiProbRepresentation,
    characteristic,
    reconstruct,
    represent,
)

__all__ = [
    "BochnerCertificate",
    "build_mc",
    "build_mq",
    "certify_state",
    "certify_distribution",
    "ScanRow",
    "ScanResult",
    "scan",
]


@dataclass(frozen=True, eq=False)
class BochnerCertificate:
    """Joint validity/positivity verdict for one operator under one representation."""

    orders: tuple[int, ...]
    phi: np.ndarray
    mu: np.ndarray
    mc_min_eig: float
    mq_min_eig: float
    is_quantum_state: bool
    is_positively_representable: bool
    boundary: bool
    tol: Tolerance
    state_min_eig: float
    min_mu: float
    oracle_agreement_state: bool
    oracle_agreement_positivity: bool
    input_mu_min: float | None = None


def _require_conjugate_symmetric(
    group: FiniteAbelianGroup, phi, tol: Tolerance
) -> np.ndarray:
    arr = _as_group_values(group, phi)
    residual = float(np.max(np.abs(arr[group._inv] - arr.conj())))
    if residual > tol.band(max_abs(arr)):
        raise NotConjugateSymmetric(
            f"phi(g^-1) != conj(phi(g)): residual {residual:.3e}"
        )
    return arr


def build_mc(
    group: FiniteAbelianGroup, phi, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Translate matrix M[g, g'] = phi(g' g^-1) in lexicographic element order."""
    arr = _require_conjugate_symmetric(group, phi, tol)
    return arr[group._diff]


def build_mq(
    group: FiniteAbelianGroup,
    phi,
    cocycle: CocycleTable,
    tol: Tolerance = DEFAULT_TOL,
) -> np.ndarray:
    """Twisted translate matrix M[g, g'] = phi(g' g^-1) alpha(g^-1, g').

    The twist factor comes from expanding Tr(rho A^dag A) in the frame; the
    frame conventions make the result Hermitian, so a Hermiticity violation
    indicates a cocycle inconsistent with phi and is raised, naming the pair.
    """
    arr = _require_conjugate_symmetric(group, phi, tol)
    if cocycle.group.orders != group.orders:
        raise CocycleMismatch(
            f"cocycle over group {cocycle.group.orders}, phi over {group.orders}"
        )
    m = arr[group._diff] * cocycle.values[group._inv, :]
    deviation = np.abs(m - m.conj().T)
    worst = float(np.max(deviation))
    if worst > 10.0 * tol.band(max_abs(arr)):
        a, b = np.unravel_index(int(np.argmax(deviation)), m.shape)
        raise CocycleMismatch(
            f"twisted translate matrix not Hermitian at pair "
            f"({group.elements[a]}, {group.elements[b]}): deviation {worst:.3e}"
        )
    return m


def certify_state(
    rep: QuasiProbRepresentation,
    rho,
    tol: Tolerance = DEFAULT_TOL,
    cocycle: CocycleTable | None = None,
) -> BochnerCertificate:
    """Certify a Hermitian trace-1 operator through its characteristic function.

    Both verdicts are decided from the translate matrices alone; the direct
    spectral oracles (eigenvalues of rho, quasi-probability values) are then
    computed independently and compared. ``boundary`` flags the rare case
    where the two routes land on opposite sides of a tolerance threshold. A
    precomputed cocycle table may be supplied to amortize batch runs.
    """
    group = rep.group
    phi = characteristic(rep, rho, tol)  # validates Hermiticity and shape
    trace = phi[0]
    if abs(trace - 1.0) > tol.band(1.0):
        raise NotNormalized(f"trace = {trace:.12g}, expected 1")
    if cocycle is None:
        cocycle = cocycle_table(rep.frame, tol)

    mc = build_mc(group, phi, tol)
    mq = build_mq(group, phi, cocycle, tol)
    mc_psd, mc_min = is_psd(mc, tol)
    mq_psd, mq_min = is_psd(mq, tol)
    is_quantum = mq_psd
    is_positive = mq_psd and mc_psd

    rho_eigs = herm_eigenvalues(rho, tol)
    state_min = float(rho_eigs[0])
    state_scale = float(np.max(np.abs(rho_eigs)))
    mu = represent(rep, rho, tol)
    min_mu = float(np.min(mu))

    oracle_quantum = state_min >= -tol.band(state_scale)
    oracle_positive = oracle_quantum and min_mu >= -tol.band(max(1.0, max_abs(mu)))
    agree_state = oracle_quantum == is_quantum
    agree_positive = oracle_positive == is_positive

    return BochnerCertificate(
        orders=group.orders,
        phi=phi,
        mu=mu,
        mc_min_eig=float(mc_min),
        mq_min_eig=float(mq_min),
        is_quantum_state=bool(is_quantum),
        is_positively_representable=bool(is_positive),
        boundary=not (agree_state and agree_positive),
        tol=tol,
        state_min_eig=state_min,
        min_mu=min_mu,
        oracle_agreement_state=bool(agree_state),
        oracle_agreement_positivity=bool(agree_positive),
    )


def certify_distribution(
    rep: QuasiProbRepresentation,
    mu,
    tol: Tolerance = DEFAULT_TOL,
    cocycle: CocycleTable | None = None,
) -> BochnerCertificate:
    """Certify a distribution by reconstructing its operator first.

    Reconstruction makes distributions inconsistent with any Hermitian trace-1
    operator fail loudly instead of producing a nonsense verdict. The minimum
    of the given values is recorded on the certificate; for distributions in
    the range of the representation it must match the translate-matrix verdict.
    """
    values = np.asarray(mu)
    if np.iscomplexobj(values):
        if values.size and float(np.max(np.abs(values.imag))) > tol.band(1.0):
            raise ShapeMismatch("distribution values must be real")
        values = values.real
    values = values.astype(float)
    if values.shape != (rep.group.size,):
        raise ShapeMismatch(
            f"distribution has shape {values.shape}, expected ({rep.group.size},)"
        )
    total = float(np.sum(values))
    if abs(total - 1.0) > tol.band(1.0):
        raise NotNormalized(f"distribution sums to {total!r}, expected 1")
    rho_hat = reconstruct(rep, values)
    cert = certify_state(rep, rho_hat, tol, cocycle=cocycle)
    return replace(cert, input_mu_min=float(np.min(values)))


@dataclass(frozen=True, eq=False)
class ScanRow:
    """Per-state outcome in a batch scan; exactly one of certificate/error is set."""

    index: int
    label: str
    certificate: BochnerCertificate | None
    error: str | None


@dataclass(frozen=True, eq=False)
class ScanResult:
    rows: tuple[ScanRow, ...]
    n_states: int
    n_valid: int
    n_positive: int
    n_boundary: int
    n_failed: int


def scan(
    rep: QuasiProbRepresentation,
    states,
    tol: Tolerance = DEFAULT_TOL,
    labels=None,
) -> ScanResult:
    """Certify a list of operators, recording per-item failures without aborting.

    Rows preserve input order and the result is deterministic for identical
    inputs. Summary counts cover valid states, positively representable
    states, boundary flags, and failed rows.
    """
    states = list(states)
    if labels is None:
        labels = [f"state[{i}]" for i in range(len(states))]
    labels = list(labels)
    if len(labels) != len(states):
        raise ShapeMismatch(f"{len(labels)} labels for {len(states)} states")
    cocycle = cocycle_table(rep.frame, tol)

    rows: list[ScanRow] = []
    n_valid = n_positive = n_boundary = n_failed = 0
    for i, (label, rho) in enumerate(zip(labels, states)):
        try:
            cert = certify_state(rep, rho, tol, cocycle=cocycle)
        except PhaseFrameError as exc:
            rows.append(ScanRow(index=i, label=label, certificate=None, error=str(exc)))
            n_failed += 1
            continue
        rows.append(ScanRow(index=i, label=label, certificate=cert, error=None))
        n_valid += cert.is_quantum_state
        n_positive += cert.is_positively_representable
        n_boundary += cert.boundary
    return ScanResult(
        rows=tuple(rows),
        n_states=len(states),
        n_valid=n_valid,
        n_positive=n_positive,
        n_boundary=n_boundary,
        n_failed=n_failed,
    )
