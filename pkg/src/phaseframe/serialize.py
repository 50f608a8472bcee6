"""JSON and CSV formats for frames, states, distributions, and certificates.

All writers are deterministic: identical inputs produce byte-identical files.
Complex numbers are stored as [re, im] pairs, matrices as nested row-major
lists, CSV reals with 17 significant digits (full double round-trip).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from pathlib import Path

import numpy as np

from .bochner import BochnerCertificate
from .errors import FrameFileError, ShapeMismatch
from .frames import ProjectiveFrame, validate_frame
from .groups import FiniteAbelianGroup, make_group
from .linalg import DEFAULT_TOL, Tolerance

__all__ = [
    "SCHEMA_VERSION",
    "matrix_to_json",
    "matrix_from_json",
    "frame_to_json",
    "frame_from_json",
    "save_frame",
    "load_frame",
    "state_to_json",
    "state_from_json",
    "save_state",
    "load_state",
    "distribution_csv_bytes",
    "save_distribution_csv",
    "load_distribution_csv",
    "phi_csv_bytes",
    "certificate_to_json",
    "save_json",
    "sha256_file",
]

SCHEMA_VERSION = 1


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def element_str(g) -> str:
    """Render a residue tuple as ``(0,1)`` with no spaces."""
    return "(" + ",".join(str(int(r)) for r in g) + ")"


def parse_element(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise FrameFileError(f"malformed element tuple {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError as exc:
        raise FrameFileError(f"malformed element tuple {text!r}") from exc


def matrix_to_json(m: np.ndarray) -> list:
    arr = np.asarray(m, dtype=np.complex128)
    return [[[float(z.real), float(z.imag)] for z in row] for row in arr]


def matrix_from_json(data) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FrameFileError(f"malformed matrix payload: {exc}") from exc
    if arr.ndim != 3 or arr.shape[2] != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise FrameFileError(f"matrix payload has shape {arr.shape}, expected (rows, cols, 2)")
    return arr[..., 0] + 1j * arr[..., 1]


def frame_to_json(frame: ProjectiveFrame) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "group": {"orders": list(frame.group.orders)},
        "dim": frame.dim,
        "elements": [
            {"g": list(g), "matrix": matrix_to_json(op)}
            for g, op in zip(frame.group.elements, frame.operators)
        ],
        "metadata": frame.metadata,
    }


def frame_from_json(data, tol: Tolerance = DEFAULT_TOL) -> ProjectiveFrame:
    """Rebuild a frame from its JSON form and re-verify every invariant.

    Structural problems raise FrameFileError; a structurally sound file whose
    operators violate a frame invariant raises the specific invariant error.
    """
    if not isinstance(data, dict):
        raise FrameFileError("frame file must contain a JSON object")
    try:
        orders = data["group"]["orders"]
        dim = int(data["dim"])
        entries = data["elements"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FrameFileError(f"frame file missing required field: {exc}") from exc
    if int(data.get("schema_version", -1)) != SCHEMA_VERSION:
        raise FrameFileError(
            f"unsupported schema_version {data.get('schema_version')!r}"
        )
    group = make_group(orders)
    if not isinstance(entries, list) or len(entries) != group.size:
        raise FrameFileError(
            f"frame file lists {len(entries) if isinstance(entries, list) else '?'} "
            f"elements, group has {group.size}"
        )
    operators = []
    for pos, entry in enumerate(entries):
        try:
            g = tuple(int(r) for r in entry["g"])
            payload = entry["matrix"]
        except (KeyError, TypeError, ValueError) as exc:
            raise FrameFileError(f"malformed element entry at position {pos}: {exc}") from exc
        if g != group.elements[pos]:
            raise FrameFileError(
                f"element {g} at position {pos} breaks lexicographic order "
                f"(expected {group.elements[pos]})"
            )
        op = matrix_from_json(payload)
        if op.shape != (dim, dim):
            raise FrameFileError(
                f"operator at {g} has shape {op.shape}, frame dim is {dim}"
            )
        operators.append(op)
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise FrameFileError("metadata must be a JSON object")
    frame = ProjectiveFrame(group=group, operators=tuple(operators), dim=dim, metadata=metadata)
    validate_frame(frame, tol)
    return frame


def save_json(path, obj) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")


def save_frame(frame: ProjectiveFrame, path) -> None:
    save_json(path, frame_to_json(frame))


def load_frame(path, tol: Tolerance = DEFAULT_TOL) -> ProjectiveFrame:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FrameFileError(f"cannot read frame file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FrameFileError(f"frame file is not valid JSON: {exc}") from exc
    return frame_from_json(data, tol)


def state_to_json(rho: np.ndarray) -> dict:
    arr = np.asarray(rho, dtype=np.complex128)
    return {
        "schema_version": SCHEMA_VERSION,
        "dim": int(arr.shape[0]),
        "matrix": matrix_to_json(arr),
    }


def state_from_json(data) -> np.ndarray:
    if not isinstance(data, dict):
        raise FrameFileError("state file must contain a JSON object")
    try:
        dim = int(data["dim"])
        payload = data["matrix"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FrameFileError(f"state file missing required field: {exc}") from exc
    arr = matrix_from_json(payload)
    if arr.shape != (dim, dim):
        raise FrameFileError(f"state matrix shape {arr.shape} does not match dim {dim}")
    return arr


def save_state(rho: np.ndarray, path) -> None:
    save_json(path, state_to_json(rho))


def load_state(path) -> np.ndarray:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FrameFileError(f"cannot read state file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FrameFileError(f"state file is not valid JSON: {exc}") from exc
    return state_from_json(data)


def distribution_csv_bytes(group: FiniteAbelianGroup, mu) -> bytes:
    """CSV with header ``index_tuple,mu``, rows in lexicographic dual order."""
    values = np.asarray(mu, dtype=float)
    if values.shape != (group.size,):
        raise ShapeMismatch(
            f"distribution has shape {values.shape}, expected ({group.size},)"
        )
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index_tuple", "mu"])
    for g, value in zip(group.elements, values):
        writer.writerow([element_str(g), _g17(value)])
    return buf.getvalue().encode("utf-8")


def save_distribution_csv(path, group: FiniteAbelianGroup, mu) -> None:
    Path(path).write_bytes(distribution_csv_bytes(group, mu))


def load_distribution_csv(path, group: FiniteAbelianGroup) -> np.ndarray:
    """Read a distribution CSV back, enforcing the exact dual index order."""
    try:
        rows = list(csv.reader(Path(path).read_text(encoding="utf-8").splitlines()))
    except OSError as exc:
        raise FrameFileError(f"cannot read distribution file: {exc}") from exc
    if not rows or rows[0] != ["index_tuple", "mu"]:
        raise FrameFileError("distribution CSV must start with header 'index_tuple,mu'")
    body = rows[1:]
    if len(body) != group.size:
        raise ShapeMismatch(
            f"distribution CSV has {len(body)} rows, group has {group.size} elements"
        )
    values = np.empty(group.size, dtype=float)
    for pos, row in enumerate(body):
        if len(row) != 2:
            raise FrameFileError(f"malformed CSV row {pos + 2}: {row!r}")
        if parse_element(row[0]) != group.elements[pos]:
            raise ShapeMismatch(
                f"CSV row {pos + 2} is indexed {row[0]}, expected "
                f"{element_str(group.elements[pos])}"
            )
        try:
            values[pos] = float(row[1])
        except ValueError as exc:
            raise FrameFileError(f"malformed value in CSV row {pos + 2}: {row[1]!r}") from exc
    return values


def phi_csv_bytes(group: FiniteAbelianGroup, phi) -> bytes:
    """CSV of a characteristic function: ``element_tuple,re,im`` per group element."""
    values = np.asarray(phi, dtype=np.complex128)
    if values.shape != (group.size,):
        raise ShapeMismatch(
            f"characteristic function has shape {values.shape}, expected ({group.size},)"
        )
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["element_tuple", "re", "im"])
    for g, value in zip(group.elements, values):
        writer.writerow([element_str(g), _g17(value.real), _g17(value.imag)])
    return buf.getvalue().encode("utf-8")


def certificate_to_json(
    cert: BochnerCertificate,
    frame_ref: dict,
    state_ref: dict,
) -> dict:
    """Certificate payload; verdicts are recomputable from the stored phi."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "frame": frame_ref,
        "state": state_ref,
        "group": {"orders": list(cert.orders)},
        "phi": [[float(z.real), float(z.imag)] for z in cert.phi],
        "mu": [float(x) for x in cert.mu],
        "mc_min_eig": cert.mc_min_eig,
        "mq_min_eig": cert.mq_min_eig,
        "verdicts": {
            "is_quantum_state": cert.is_quantum_state,
            "is_positively_representable": cert.is_positively_representable,
        },
        "boundary": cert.boundary,
        "tol": {"atol": cert.tol.atol, "rtol": cert.tol.rtol},
        "oracle": {"state_min_eig": cert.state_min_eig, "min_mu": cert.min_mu},
        "oracle_agreement": {
            "is_quantum_state": cert.oracle_agreement_state,
            "is_positively_representable": cert.oracle_agreement_positivity,
        },
    }
    if cert.input_mu_min is not None:
        payload["input_mu_min"] = cert.input_mu_min
    return payload


def sha256_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
