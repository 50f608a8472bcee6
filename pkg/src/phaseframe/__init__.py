"""Discrete phase-space representations from projective operator frames.

Build unitary frames over finite abelian groups, Fourier-transform them into
quasi-probability representations, and certify state validity and phase-space
positivity through positive-semidefiniteness of two translate matrices of the
characteristic function.
"""

from .bochner import (
    BochnerCertificate,
    ScanResult,
    ScanRow,
    build_mc,
    build_mq,
    certify_distribution,
    certify_state,
    scan,
)
from .errors import PhaseFrameError
from .frames import (
    CocycleTable,
    ProjectiveFrame,
    cocycle_table,
    frame_bounds,
    frame_report,
    gen_pauli,
    is_faithful,
    kernel,
    leonhardt_frame,
    phase_fix,
    qubit_frame,
    tensor_frame,
    trivial_frame,
    validate_frame,
    weyl_frame,
    z2cubed_frame,
)
from .groups import (
    FiniteAbelianGroup,
    ClassicalBochnerResult,
    character_table,
    character_value,
    classical_bochner_check,
    fourier_forward,
    fourier_inverse,
    make_group,
    translate_matrix,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    dagger,
    herm_eigenvalues,
    is_psd,
    tensor,
    trace_inner,
)
from .representation import (
    QuasiProbRepresentation,
    build_representation,
    characteristic,
    gross_as_dual_distribution,
    gross_wigner_pure,
    reconstruct,
    represent,
)
from .states import (
    basis_state,
    conjugate_basis_state,
    maximally_mixed,
    quadratic_phase_vector,
    random_density,
    random_hermitian_trace1,
    random_pure,
    random_pure_family,
    random_pure_vector,
    stabilizer_states,
)

__version__ = "0.1.0"

__all__ = [
    "BochnerCertificate",
    "ClassicalBochnerResult",
    "CocycleTable",
    "DEFAULT_TOL",
    "FiniteAbelianGroup",
    "PhaseFrameError",
    "ProjectiveFrame",
    "QuasiProbRepresentation",
    "ScanResult",
    "ScanRow",
    "Tolerance",
    "basis_state",
    "build_mc",
    "build_mq",
    "build_representation",
    "certify_distribution",
    "certify_state",
    "character_table",
    "character_value",
    "characteristic",
    "classical_bochner_check",
    "cocycle_table",
    "conjugate_basis_state",
    "dagger",
    "fourier_forward",
    "fourier_inverse",
    "frame_bounds",
    "frame_report",
    "gen_pauli",
    "gross_as_dual_distribution",
    "gross_wigner_pure",
    "herm_eigenvalues",
    "is_faithful",
    "is_psd",
    "kernel",
    "leonhardt_frame",
    "make_group",
    "maximally_mixed",
    "phase_fix",
    "quadratic_phase_vector",
    "qubit_frame",
    "random_density",
    "random_hermitian_trace1",
    "random_pure",
    "random_pure_family",
    "random_pure_vector",
    "reconstruct",
    "represent",
    "scan",
    "stabilizer_states",
    "tensor",
    "tensor_frame",
    "trace_inner",
    "translate_matrix",
    "trivial_frame",
    "validate_frame",
    "weyl_frame",
    "z2cubed_frame",
]
