"""Kernel backend selection: compiled extension when available, numpy otherwise.

Set RADIUS_BOUNDS_PURE=1 to force the pure-numpy path.  The compiled Jacobi
kernel only pays off for small matrices, so large inputs are routed to the
batched LAPACK path even when the extension is present.
"""

import os

import numpy as np

from . import _kernels_py
from .errors import NoConvergence

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if os.environ.get("RADIUS_BOUNDS_PURE"):
    _compiled = None

# Crossovers measured in benchmarks/bench_kernels.py: the Jacobi kernel wins
# for small matrices at any grid size, and slightly larger ones when only a
# handful of angles are requested (per-call LAPACK overhead dominates there).
COMPILED_MAX_DIM_BATCH = 6
COMPILED_MAX_DIM_FEW = 8
FEW_THETAS = 8

HAVE_COMPILED = _compiled is not None


def backend_name() -> str:
    return "compiled" if HAVE_COMPILED else "python"


def rotated_top_eigs(a: np.ndarray, thetas) -> np.ndarray:
    """Largest eigenvalue of (e^{it}A + e^{-it}A*)/2 for each angle t."""
    a = np.asarray(a, dtype=complex)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    n = a.shape[0]
    use_compiled = _compiled is not None and (
        n <= COMPILED_MAX_DIM_BATCH
        or (n <= COMPILED_MAX_DIM_FEW and thetas.size <= FEW_THETAS)
    )
    if use_compiled:
        try:
            return _compiled.rotated_top_eigs(a.real, a.imag, thetas)
        except RuntimeError as exc:
            raise NoConvergence(str(exc)) from exc
    return _kernels_py.rotated_top_eigs(a, thetas)


def rotated_eval(a: np.ndarray):
    """Scalar theta -> top eigenvalue closure with per-call overhead trimmed."""
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    if _compiled is not None and n <= COMPILED_MAX_DIM_FEW:
        re = np.ascontiguousarray(a.real)
        im = np.ascontiguousarray(a.imag)
        kern = _compiled.rotated_top_eigs

        def f(theta: float) -> float:
            try:
                return float(kern(re, im, np.array([theta]))[0])
            except RuntimeError as exc:
                raise NoConvergence(str(exc)) from exc

        return f

    adj = a.conj().T

    def f(theta: float) -> float:
        phase = np.exp(1j * theta)
        h = 0.5 * (phase * a + np.conj(phase) * adj)
        try:
            return float(np.linalg.eigvalsh(h)[-1])
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(str(exc)) from exc

    return f


_ZERO_THETA = np.zeros(1)


def herm_top_eig(h: np.ndarray) -> float:
    """Largest eigenvalue of a Hermitian matrix (theta = 0 rotation)."""
    return float(rotated_top_eigs(h, _ZERO_THETA)[0])


def herm_norm(h: np.ndarray) -> float:
    """Operator norm of a Hermitian matrix: max(lambda_max, -lambda_min)."""
    return max(herm_top_eig(h), herm_top_eig(-h))
