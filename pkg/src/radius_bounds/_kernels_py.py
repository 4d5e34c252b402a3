"""Pure-numpy fallback for the rotated-eigenvalue kernel.

Builds the whole stack of rotated Hermitian parts and calls the batched
LAPACK eigensolver once.
"""

import numpy as np

from .errors import NoConvergence


def rotated_top_eigs(a: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Largest eigenvalue of (e^{it}A + e^{-it}A*)/2 for each angle t."""
    a = np.asarray(a, dtype=complex)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    phases = np.exp(1j * thetas)
    m = phases[:, None, None] * a[None, :, :]
    h = 0.5 * (m + m.conj().transpose(0, 2, 1))
    try:
        w = np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return w[:, -1]
