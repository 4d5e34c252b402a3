"""Matrix text format: JSON {"n": int, "re": [[...]], "im": [[...]]}.

Row-major n x n real and imaginary parts; "im" may be omitted for real
matrices.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParseError


def matrix_from_dict(obj: dict) -> np.ndarray:
    if not isinstance(obj, dict):
        raise ParseError("matrix file must contain a JSON object")
    try:
        n = int(obj["n"])
        re = np.asarray(obj["re"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix object: {exc}") from exc
    if n < 1:
        raise ParseError(f"n must be >= 1, got {n}")
    if re.shape != (n, n):
        raise ParseError(f"'re' has shape {re.shape}, expected ({n}, {n})")
    if "im" in obj and obj["im"] is not None:
        try:
            im = np.asarray(obj["im"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad 'im' block: {exc}") from exc
        if im.shape != (n, n):
            raise ParseError(f"'im' has shape {im.shape}, expected ({n}, {n})")
    else:
        im = np.zeros((n, n))
    m = re + 1j * im
    if not np.all(np.isfinite(re)) or not np.all(np.isfinite(im)):
        raise ParseError("matrix entries must be finite")
    return m


def load_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return matrix_from_dict(obj)


def matrix_to_dict(a: np.ndarray) -> dict:
    m = np.asarray(a, dtype=complex)
    out = {"n": int(m.shape[0]), "re": m.real.tolist()}
    if np.any(m.imag != 0):
        out["im"] = m.imag.tolist()
    return out


def save_matrix(a: np.ndarray, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_dict(a), indent=2) + "\n")
