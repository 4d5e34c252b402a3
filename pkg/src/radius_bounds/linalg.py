"""Dense complex matrix arithmetic, Hermitian eigendecomposition, and the
positive-semidefinite functional calculus.

Matrices are plain numpy arrays treated as immutable values; every operation
returns a fresh result.  Hermitian/PSD structure is carried by
:class:`HermitianPSD`, which caches the eigendecomposition so that fractional
powers and other scalar functions are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidExponent, NegativeResult, NoConvergence, NotHermitian, NotPSD

HERM_TOL_REL = 1e-12
HERM_TOL_ABS = 1e-14
PSD_CLAMP_REL = 1e-10

# probe grid for FunctionPair validation: {0} U {2^-10, ..., 2^10}
_PROBE_GRID = np.concatenate(([0.0], 2.0 ** np.arange(-10, 11)))


def as_matrix(a) -> np.ndarray:
    """Validate and return a finite square complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose A*."""
    return np.asarray(a, dtype=complex).conj().T.copy()


def op_norm(a) -> float:
    """Operator norm: the largest singular value."""
    m = as_matrix(a)
    try:
        return float(np.linalg.norm(m, 2))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def herm_tol(m: np.ndarray) -> float:
    return max(HERM_TOL_ABS, HERM_TOL_REL * np.linalg.norm(m))


def check_hermitian(m: np.ndarray) -> None:
    """Raise NotHermitian unless M = M* within the relative tolerance."""
    defect = np.linalg.norm(m - m.conj().T)
    if defect > herm_tol(m):
        raise NotHermitian(f"symmetry defect {defect:.3e} exceeds tolerance")


def herm_eig(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with real eigenvalues sorted
    nonincreasing and matching unitary eigenvector columns.
    """
    m = as_matrix(m)
    check_hermitian(m)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return w[::-1].copy(), v[:, ::-1].copy()


@dataclass(frozen=True)
class HermitianPSD:
    """Hermitian positive-semidefinite matrix with cached eigendecomposition.

    ``entries = eigenvectors @ diag(eigenvalues) @ eigenvectors*`` within
    roundoff; eigenvalues are nonnegative and sorted nonincreasing.
    """

    entries: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def norm(self) -> float:
        """Operator norm: the largest eigenvalue."""
        return float(self.eigenvalues[0]) if self.dim else 0.0

    @classmethod
    def from_matrix(cls, m) -> "HermitianPSD":
        """Build from a nominally-PSD Hermitian matrix, clamping roundoff.

        Eigenvalues in [-PSD_CLAMP_REL * ||M||, 0) are clamped to zero; more
        negative values raise NotPSD.
        """
        w, v = herm_eig(m)
        floor = -PSD_CLAMP_REL * max(abs(w[0]), abs(w[-1]), 1e-300)
        if w[-1] < floor:
            raise NotPSD(f"eigenvalue {w[-1]:.3e} below clamp floor {floor:.3e}")
        w = np.clip(w, 0.0, None)
        return cls(entries=np.asarray(m, dtype=complex).copy(), eigenvalues=w, eigenvectors=v)

    @classmethod
    def from_eigh(cls, eigenvalues: np.ndarray, eigenvectors: np.ndarray) -> "HermitianPSD":
        """Assemble from a nonnegative spectrum and unitary eigenvectors."""
        w = np.asarray(eigenvalues, dtype=float)
        v = np.asarray(eigenvectors, dtype=complex)
        order = np.argsort(w)[::-1]
        w, v = w[order].copy(), v[:, order].copy()
        if w.size and w[-1] < 0:
            raise NotPSD(f"negative eigenvalue {w[-1]:.3e}")
        entries = (v * w) @ v.conj().T
        entries = 0.5 * (entries + entries.conj().T)
        return cls(entries=entries, eigenvalues=w, eigenvectors=v)


def abs_op(a) -> HermitianPSD:
    """Absolute value |A| = (A*A)^{1/2}."""
    m = as_matrix(a)
    w, v = herm_eig(m.conj().T @ m)
    return HermitianPSD.from_eigh(np.sqrt(np.clip(w, 0.0, None)), v)


def psd_power(m: HermitianPSD, p: float) -> HermitianPSD:
    """Fractional power M^p through the spectrum, with the 0^0 := 1 convention."""
    p = float(p)
    if not np.isfinite(p) or p < 0:
        raise InvalidExponent(f"exponent must be finite and >= 0, got {p}")
    return HermitianPSD.from_eigh(np.power(m.eigenvalues, p), m.eigenvectors)


def apply_scalar_fn(m: HermitianPSD, h: Callable[[float], float]) -> HermitianPSD:
    """Functional calculus h(M): map the eigenvalues, keep the eigenvectors."""
    try:
        vals = np.asarray(h(m.eigenvalues), dtype=float)
        if vals.shape != m.eigenvalues.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(h(x)) for x in m.eigenvalues])
    if np.any(vals < -1e-12):
        raise NegativeResult(f"function produced {vals.min():.3e} on the spectrum")
    return HermitianPSD.from_eigh(np.clip(vals, 0.0, None), m.eigenvectors)


@dataclass(frozen=True)
class FunctionPair:
    """Pair (f, g) of nonnegative scalar functions with f(t) g(t) = t.

    The product constraint and nonnegativity are checked on a dyadic probe
    grid at construction.
    """

    f: Callable = field(repr=False)
    g: Callable = field(repr=False)
    label: str = ""

    def __post_init__(self) -> None:
        for t in _PROBE_GRID:
            ft, gt = float(self.f(t)), float(self.g(t))
            if ft < 0 or gt < 0:
                raise ValueError(f"pair {self.label!r} negative at t={t}")
            if abs(ft * gt - t) > 1e-10 * max(1.0, t):
                raise ValueError(
                    f"pair {self.label!r} violates f(t)g(t)=t at t={t}: {ft * gt}"
                )


def power_pair(v: float, label: str | None = None) -> FunctionPair:
    """The power family f(t) = t^(1-v), g(t) = t^v for v in [0, 1] (0^0 := 1)."""
    if not 0.0 <= v <= 1.0:
        raise InvalidExponent(f"v must lie in [0, 1], got {v}")
    return FunctionPair(
        f=lambda t, e=1.0 - v: np.power(t, e),
        g=lambda t, e=v: np.power(t, e),
        label=label if label is not None else f"v{v:g}",
    )
