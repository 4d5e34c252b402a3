"""Numerical radius via the rotation method, the Cartesian decomposition, and
an independent sphere-sampling oracle.

The rotation identity omega(A) = max_t lambda_max((e^{it}A + e^{-it}A*)/2)
turns the supremum over unit vectors into a one-dimensional maximization,
handled by a uniform angle grid plus golden-section refinement.  The oracle
maximizes |<Ax, x>| directly over random unit vectors and only ever returns a
lower bound, so it can cross-check the rotation method from below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import rotated_eval, rotated_top_eigs
from .linalg import adjoint, as_matrix, check_hermitian, op_norm

TWO_PI = 2.0 * math.pi
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class CartesianPair:
    """Hermitian parts of A = B + iC."""

    b: np.ndarray
    c: np.ndarray


@dataclass(frozen=True)
class RadiusResult:
    omega: float
    argmax_theta: float
    method: str  # "rotation" or "oracle"
    theta_grid_size: int


def cartesian(a) -> CartesianPair:
    """Cartesian decomposition B = (A + A*)/2, C = (A - A*)/(2i)."""
    m = as_matrix(a)
    b = 0.5 * (m + m.conj().T)
    c = (m - m.conj().T) / 2j
    check_hermitian(b)
    check_hermitian(c)
    return CartesianPair(b=b, c=c)


def _golden_max(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Golden-section maximization of f on [lo, hi] to width tol in x."""
    h = hi - lo
    if h <= tol:
        x = 0.5 * (lo + hi)
        return x, f(x)
    n = int(math.ceil(math.log(tol / h) / math.log(_INV_PHI)))
    c = lo + _INV_PHI2 * h
    d = lo + _INV_PHI * h
    yc, yd = f(c), f(d)
    for _ in range(n):
        if yc > yd:
            hi, d, yd = d, c, yc
            h *= _INV_PHI
            c = lo + _INV_PHI2 * h
            yc = f(c)
        else:
            lo, c, yc = c, d, yd
            h *= _INV_PHI
            d = lo + _INV_PHI * h
            yd = f(d)
    if yc > yd:
        return c, yc
    return d, yd


def numerical_radius(a, theta_grid: int = 1024, refine_tol: float = 1e-10) -> RadiusResult:
    """Exact numerical radius by grid sweep plus golden-section refinement.

    Sweeps lambda_max of the rotated Hermitian part on a uniform theta grid,
    then refines every grid cell tied for the maximum (within 1e-12) and
    reports the smallest argmax angle.
    """
    if theta_grid < 64:
        raise ValueError(f"theta_grid must be >= 64, got {theta_grid}")
    m = as_matrix(a)
    n = m.shape[0]
    if n == 1:
        val = abs(complex(m[0, 0]))
        theta = (-np.angle(m[0, 0])) % TWO_PI if val > 0 else 0.0
        return RadiusResult(omega=val, argmax_theta=float(theta), method="rotation",
                            theta_grid_size=theta_grid)

    thetas = np.linspace(0.0, TWO_PI, theta_grid, endpoint=False)
    vals = rotated_top_eigs(m, thetas)
    best = float(vals.max())
    dt = TWO_PI / theta_grid

    f = rotated_eval(m)
    candidates = [(best, float(thetas[int(np.argmax(vals))]))]
    for i in np.flatnonzero(vals >= best - 1e-12):
        x, y = _golden_max(f, thetas[i] - dt, thetas[i] + dt, refine_tol)
        candidates.append((y, x % TWO_PI))
    omega = max(y for y, _ in candidates)
    argmax = min(t for y, t in candidates if y >= omega - 1e-15)
    return RadiusResult(omega=omega, argmax_theta=argmax, method="rotation",
                        theta_grid_size=theta_grid)


def radius_oracle(a, samples: int = 2000, polish_steps: int = 200,
                  seed: int = 0) -> RadiusResult:
    """Lower bound on omega(A) from sphere sampling plus projected ascent.

    Draws complex-Gaussian unit vectors, keeps the best scorers, and polishes
    each with a shifted power-type ascent on |<Ax, x>|.  The result never
    exceeds the true numerical radius.
    """
    if samples < 1000:
        raise ValueError(f"samples must be >= 1000, got {samples}")
    m = as_matrix(a)
    n = m.shape[0]
    scale = op_norm(m)
    if scale == 0.0:
        return RadiusResult(omega=0.0, argmax_theta=0.0, method="oracle",
                            theta_grid_size=samples)

    rng = np.random.default_rng(seed)
    x = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    q = np.einsum("ij,jk,ik->i", x.conj(), m, x)
    order = np.argsort(np.abs(q))[::-1]

    ma = adjoint(m)
    best_val, best_q = 0.0, complex(q[order[0]])
    for idx in order[: min(10, samples)]:
        v = x[idx].copy()
        qv = complex(q[idx])
        for _ in range(polish_steps):
            mag = abs(qv)
            phase = qv.conjugate() / mag if mag > 1e-300 else 1.0
            # power step on the rotated Hermitian part, shifted to be PSD
            y = 0.5 * (phase * (m @ v) + np.conj(phase) * (ma @ v)) + scale * v
            nrm = np.linalg.norm(y)
            if nrm == 0.0:
                break
            v = y / nrm
            qv = complex(v.conj() @ m @ v)
        if abs(qv) > best_val:
            best_val, best_q = abs(qv), qv
    theta = (-np.angle(best_q)) % TWO_PI if best_val > 0 else 0.0
    return RadiusResult(omega=float(best_val), argmax_theta=float(theta),
                        method="oracle", theta_grid_size=samples)


def power_check(a, n: int, theta_grid: int = 1024) -> tuple[float, float]:
    """Return (omega(A^n), omega(A)^n) for the power inequality."""
    if not 1 <= int(n) <= 8:
        raise ValueError(f"n must be in [1, 8], got {n}")
    m = as_matrix(a)
    w = numerical_radius(m, theta_grid=theta_grid).omega
    wn = numerical_radius(np.linalg.matrix_power(m, int(n)), theta_grid=theta_grid).omega
    return wn, w ** int(n)
