"""One operation per numerical-radius / operator-norm inequality, plus chain
verifiers that assert the claimed orderings between bounds.

Every bound carries a stable catalog name so that the harness and CLI can
iterate the whole collection generically.  All "<=" assertions use relative
tolerance ``rel * max(1, larger side)`` with an absolute floor of 1e-12.

Norms of Hermitian combinations go through the rotated-eigenvalue backend
(top eigenvalue) instead of a full SVD; ``evaluate_catalog`` computes the
absolute values |A| and |A*| once and shares them across all bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import herm_norm, herm_top_eig
from .errors import DimensionMismatch, InvalidExponent, NotUnitVector
from .linalg import (
    FunctionPair,
    HermitianPSD,
    abs_op,
    adjoint,
    apply_scalar_fn,
    as_matrix,
    op_norm,
    power_pair,
    psd_power,
)
from .radius import _golden_max, numerical_radius

TOL_REL = 1e-8
TOL_ABS = 1e-12

THEOREM8_VS = (0.0, 0.25, 0.5, 0.75, 1.0)

# name -> (side, target); target "omega" bounds omega, "omega_squared" bounds
# omega^2, "norm_sum" bounds the norm of a sum of positives.
CATALOG_SPEC: dict[str, tuple[str, str]] = {
    "lower.half_norm": ("lower", "omega"),
    "lower.quarter_sum_squares": ("lower", "omega_squared"),
    "lower.final_refined": ("lower", "omega_squared"),
    "upper.norm": ("upper", "omega"),
    "upper.kittaneh02": ("upper", "omega"),
    "upper.kittaneh07": ("upper", "omega"),
    "upper.min_v_29": ("upper", "omega"),
    "upper.corollary_29": ("upper", "omega"),
    "upper.sq04": ("upper", "omega_squared"),
    "upper.eq25": ("upper", "omega_squared"),
    "upper.satary24": ("upper", "omega_squared"),
    "lemma17.sum_bound": ("upper", "norm_sum"),
}
for _v in THEOREM8_VS:
    CATALOG_SPEC[f"upper.theorem8.v{_v:g}"] = ("upper", "omega_squared")
    CATALOG_SPEC[f"upper.theorem8.v{_v:g}.relaxed"] = ("upper", "omega_squared")


def allowed_slack(larger: float, rel: float = TOL_REL) -> float:
    return max(TOL_ABS, rel * max(1.0, abs(larger)))


def leq(lhs: float, rhs: float, rel: float = TOL_REL) -> bool:
    return lhs <= rhs + allowed_slack(max(abs(lhs), abs(rhs)), rel)


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: float
    side: str  # "upper" | "lower"
    target: str  # "omega" | "omega_squared" | "norm_sum"

    def __post_init__(self) -> None:
        if not np.isfinite(self.value) or self.value < 0:
            raise ValueError(f"{self.name}: value must be finite and >= 0")
        if self.side not in ("upper", "lower") or self.target not in (
            "omega", "omega_squared", "norm_sum",
        ):
            raise ValueError(f"{self.name}: bad side/target {self.side}/{self.target}")
        spec = CATALOG_SPEC.get(self.name)
        if spec is not None and spec != (self.side, self.target):
            raise ValueError(f"{self.name}: side/target disagree with catalog")


def _bv(name: str, value: float) -> BoundValue:
    side, target = CATALOG_SPEC[name]
    return BoundValue(name=name, value=float(value), side=side, target=target)


@dataclass(frozen=True)
class ChainVerdict:
    """Ordered inequality links, each (lhs, rhs, slack = rhs - lhs)."""

    chain_name: str
    links: list[tuple[BoundValue, BoundValue, float]]
    holds: bool
    tolerance: float


def _chain(name: str, pairs: list[tuple[BoundValue, BoundValue]],
           rel: float = TOL_REL) -> ChainVerdict:
    links = [(lo, hi, hi.value - lo.value) for lo, hi in pairs]
    holds = all(leq(lo.value, hi.value, rel) for lo, hi, _ in links)
    return ChainVerdict(chain_name=name, links=links, holds=holds, tolerance=rel)


def _quantity(name: str, value: float, target: str = "omega") -> BoundValue:
    # chain endpoint that is the bounded quantity itself, not a catalog bound
    return BoundValue(name=name, value=float(value), side="lower", target=target)


def _sum_squares(m: np.ndarray) -> np.ndarray:
    """|A|^2 + |A*|^2 = A*A + AA*."""
    return m.conj().T @ m + m @ m.conj().T


# ---------------------------------------------------------------------------
# individual bounds


def classical_bounds(a) -> tuple[BoundValue, BoundValue]:
    """Sandwich ||A||/2 <= omega(A) <= ||A||."""
    nrm = op_norm(a)
    return _bv("lower.half_norm", 0.5 * nrm), _bv("upper.norm", nrm)


def kittaneh_02(a) -> BoundValue:
    """omega(A) <= (||A|| + ||A^2||^(1/2)) / 2."""
    m = as_matrix(a)
    return _bv("upper.kittaneh02", 0.5 * (op_norm(m) + np.sqrt(op_norm(m @ m))))


def kittaneh_07(a) -> BoundValue:
    """omega(A) <= || |A| + |A*| || / 2."""
    m = as_matrix(a)
    return _bv("upper.kittaneh07",
               0.5 * herm_top_eig(abs_op(m).entries + abs_op(adjoint(m)).entries))


def squared_upper_04(a) -> BoundValue:
    """omega^2(A) <= || |A|^2 + |A*|^2 || / 2."""
    return _bv("upper.sq04", 0.5 * herm_top_eig(_sum_squares(as_matrix(a))))


def squared_lower_01(a) -> BoundValue:
    """|| |A|^2 + |A*|^2 || / 4 <= omega^2(A)."""
    return _bv("lower.quarter_sum_squares",
               0.25 * herm_top_eig(_sum_squares(as_matrix(a))))


def _h29(pa: HermitianPSD, ps: HermitianPSD, v: float) -> float:
    p = (pa.eigenvectors * np.power(pa.eigenvalues, 2.0 * (1.0 - v))) @ pa.eigenvectors.conj().T
    q = (ps.eigenvectors * np.power(ps.eigenvalues, 2.0 * v)) @ ps.eigenvectors.conj().T
    return 0.5 * herm_top_eig(p + q)


def _min29(pa: HermitianPSD, ps: HermitianPSD, v_grid: int,
           refine_tol: float) -> tuple[float, float]:
    grid = np.linspace(0.0, 1.0, v_grid)
    # batched grid scan: both power stacks in one shot
    ea = np.power(pa.eigenvalues[None, :], 2.0 * (1.0 - grid)[:, None])
    es = np.power(ps.eigenvalues[None, :], 2.0 * grid[:, None])
    stack = (np.einsum("ik,vk,jk->vij", pa.eigenvectors, ea, pa.eigenvectors.conj())
             + np.einsum("ik,vk,jk->vij", ps.eigenvectors, es, ps.eigenvectors.conj()))
    vals = 0.5 * np.linalg.eigvalsh(stack)[:, -1]
    best = float(vals.min())
    dv = 1.0 / (v_grid - 1)
    candidates = [(best, float(grid[int(np.argmin(vals))]))]
    for i in np.flatnonzero(vals <= best + 1e-12):
        lo, hi = max(0.0, grid[i] - dv), min(1.0, grid[i] + dv)
        x, y = _golden_max(lambda v: -_h29(pa, ps, v), lo, hi, refine_tol)
        candidates.append((-y, x))
    value = min(y for y, _ in candidates)
    argmin = min(v for y, v in candidates if y <= value + 1e-15)
    return value, argmin


def min_over_v_29(a, v_grid: int = 65,
                  refine_tol: float = 1e-10) -> tuple[BoundValue, float]:
    """min over v in [0,1] of || |A|^(2(1-v)) + |A*|^(2v) || / 2.

    Uniform grid scan followed by golden-section refinement of every bracket
    tied for the minimum; returns the bound and the argmin v.
    """
    if v_grid < 33:
        raise ValueError(f"v_grid must be >= 33, got {v_grid}")
    m = as_matrix(a)
    value, argmin = _min29(abs_op(m), abs_op(adjoint(m)), v_grid, refine_tol)
    return _bv("upper.min_v_29", value), argmin


def corollary_after_29(a, v: float) -> BoundValue:
    """Scalar relaxation of the min-over-v bound at a fixed v."""
    if not (np.isfinite(v) and 0.0 <= v <= 1.0):
        raise InvalidExponent(f"v must lie in [0, 1], got {v}")
    m = as_matrix(a)
    nrm = op_norm(m)
    cross = op_norm(psd_power(abs_op(m), 1.0 - v).entries
                    @ psd_power(abs_op(adjoint(m)), v).entries)
    s, t = nrm ** (2.0 * (1.0 - v)), nrm ** (2.0 * v)
    return _bv("upper.corollary_29", 0.25 * (s + t + np.sqrt((s - t) ** 2 + 4.0 * cross ** 2)))


def _theorem8(pa: HermitianPSD, ps: HermitianPSD,
              pair: FunctionPair) -> tuple[BoundValue, BoundValue]:
    f2 = apply_scalar_fn(pa, lambda t: np.power(pair.f(t), 2)).entries
    g2 = apply_scalar_fn(ps, lambda t: np.power(pair.g(t), 2)).entries
    f4 = apply_scalar_fn(pa, lambda t: np.power(pair.f(t), 4)).entries
    g4 = apply_scalar_fn(ps, lambda t: np.power(pair.g(t), 4)).entries
    sum_norm = herm_top_eig(f4 + g4)
    cross_norm = herm_norm(f2 @ g2 + g2 @ f2)
    name = f"upper.theorem8.{pair.label}"
    refined = BoundValue(name, 0.25 * sum_norm + 0.25 * cross_norm,
                         "upper", "omega_squared")
    relaxed = BoundValue(name + ".relaxed", 0.5 * sum_norm, "upper", "omega_squared")
    return refined, relaxed


def theorem_8(a, pair: FunctionPair) -> tuple[BoundValue, BoundValue]:
    """General (f, g) bound on omega^2: refined and relaxed forms."""
    m = as_matrix(a)
    return _theorem8(abs_op(m), abs_op(adjoint(m)), pair)


def _eq25(m: np.ndarray, pa: HermitianPSD, ps: HermitianPSD) -> BoundValue:
    cross = pa.entries @ ps.entries
    return _bv("upper.eq25", 0.25 * (herm_top_eig(_sum_squares(m))
                                     + herm_norm(cross + cross.conj().T)))


def eq_25(a) -> BoundValue:
    """omega^2(A) <= (|| |A|^2 + |A*|^2 || + || |A||A*| + |A*||A| ||) / 4."""
    m = as_matrix(a)
    return _eq25(m, abs_op(m), abs_op(adjoint(m)))


def chain_26(a, omega: float | None = None, theta_grid: int = 1024,
             rel: float = TOL_REL) -> ChainVerdict:
    """omega <= sqrt(eq25 quantity) <= Kittaneh (02) bound."""
    m = as_matrix(a)
    if omega is None:
        omega = numerical_radius(m, theta_grid=theta_grid).omega
    # eq25 bounds omega^2, so its square root is the omega-scale middle term
    mid = _quantity("chain26.sqrt_eq25", np.sqrt(eq_25(m).value))
    return _chain("chain_26", [
        (_quantity("omega", omega), mid),
        (mid, kittaneh_02(m)),
    ], rel)


def eq_24_comparison(a, theta_grid: int = 1024) -> tuple[BoundValue, BoundValue]:
    """Bound with omega of the product |A||A*| versus the eq25 bound."""
    m = as_matrix(a)
    pa, ps = abs_op(m), abs_op(adjoint(m))
    w_prod = numerical_radius(pa.entries @ ps.entries, theta_grid=theta_grid).omega
    satary = _bv("upper.satary24",
                 0.25 * herm_top_eig(_sum_squares(m)) + 0.5 * w_prod)
    return satary, _eq25(m, pa, ps)


def reverse_power_bound(a, omega: float | None = None, theta_grid: int = 1024,
                        rel: float = TOL_REL) -> ChainVerdict:
    """Reverse of the power inequality at n = 2."""
    m = as_matrix(a)
    if omega is None:
        omega = numerical_radius(m, theta_grid=theta_grid).omega
    pa, ps = abs_op(m).entries, abs_op(adjoint(m)).entries
    w_a2 = numerical_radius(m @ m, theta_grid=theta_grid).omega
    cross = pa @ ps
    quarter_cross = _quantity("reverse.quarter_cross",
                              0.25 * herm_norm(cross + cross.conj().T))
    half_sq = _quantity("reverse.half_norm_A2", 0.5 * op_norm(m @ m))
    omega_a2 = _quantity("reverse.omega_A2", w_a2)
    omega_sq = _quantity("omega_squared", omega ** 2, target="omega_squared")
    relaxed = _quantity("reverse.quarter_plus_omega_A2",
                        0.25 * herm_top_eig(_sum_squares(m)) + w_a2,
                        target="omega_squared")
    return _chain("reverse_power", [
        (quarter_cross, half_sq),
        (half_sq, omega_a2),
        (omega_sq, relaxed),
    ], rel)


def triangle_refinement_6(a, b, rel: float = TOL_REL) -> ChainVerdict:
    """Four-term refinement of the triangle inequality for the operator norm."""
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape != mb.shape:
        raise DimensionMismatch(f"shapes {ma.shape} and {mb.shape}")
    na, nb = op_norm(ma), op_norm(mb)
    cross = ma.conj().T @ mb
    t0 = _quantity("triangle.norm_sum", op_norm(ma + mb), target="norm_sum")
    t1 = _quantity("triangle.gram_bound",
                   np.sqrt(herm_top_eig(ma.conj().T @ ma + mb.conj().T @ mb)
                           + herm_norm(cross + cross.conj().T)),
                   target="norm_sum")
    t2 = _quantity("triangle.cross_bound",
                   np.sqrt(na ** 2 + nb ** 2 + 2.0 * op_norm(cross)),
                   target="norm_sum")
    t3 = _quantity("triangle.sum_of_norms", na + nb, target="norm_sum")
    return _chain("triangle_refinement", [(t0, t1), (t1, t2), (t2, t3)], rel)


def lemma_17_bound(s: HermitianPSD, t: HermitianPSD) -> BoundValue:
    """Upper bound on ||S + T|| for positive S, T."""
    if s.dim != t.dim:
        raise DimensionMismatch(f"dims {s.dim} and {t.dim}")
    ns, nt = s.norm, t.norm
    cross = op_norm(psd_power(s, 0.5).entries @ psd_power(t, 0.5).entries)
    return _bv("lemma17.sum_bound",
               0.5 * (ns + nt + np.sqrt((ns - nt) ** 2 + 4.0 * cross ** 2)))


def lemma_08_check(a, pair: FunctionPair, x, y) -> tuple[float, float]:
    """Mixed Cauchy-Schwarz: |<Ax, y>| vs ||f(|A|)x|| * ||g(|A*|)y||."""
    m = as_matrix(a)
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    for v in (x, y):
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise NotUnitVector(f"norm {np.linalg.norm(v)} != 1")
    lhs = abs(np.vdot(y, m @ x))
    fa = apply_scalar_fn(abs_op(m), pair.f).entries
    gs = apply_scalar_fn(abs_op(adjoint(m)), pair.g).entries
    rhs = float(np.linalg.norm(fa @ x) * np.linalg.norm(gs @ y))
    return float(lhs), rhs


def positive_diff_norm_14(s: HermitianPSD, t: HermitianPSD) -> tuple[float, float]:
    """(||S - T||, ||S + T||) for positive S, T; the first never exceeds the second."""
    if s.dim != t.dim:
        raise DimensionMismatch(f"dims {s.dim} and {t.dim}")
    return herm_norm(s.entries - t.entries), herm_top_eig(s.entries + t.entries)


def final_middle_terms(a, omega: float | None = None,
                       theta_grid: int = 1024) -> tuple[float, float]:
    """The refined lower bound's middle term in its two equivalent forms.

    Statement form uses ||(A+A*)^2 (A-A*)^2|| / 8, the proof form uses
    2 ||B^2 C^2|| from the Cartesian decomposition; both are returned so their
    agreement can be asserted.
    """
    m = as_matrix(a)
    if omega is None:
        omega = numerical_radius(m, theta_grid=theta_grid).omega
    s = m + m.conj().T
    d = m - m.conj().T
    b = 0.5 * s
    c = d / 2j
    stmt = 0.5 * np.sqrt(2.0 * omega ** 4 + 0.125 * op_norm(s @ s @ d @ d))
    proof = 0.5 * np.sqrt(2.0 * omega ** 4 + 2.0 * op_norm(b @ b @ c @ c))
    return float(stmt), float(proof)


def lower_refinement_final(a, omega: float | None = None, theta_grid: int = 1024,
                           rel: float = TOL_REL) -> ChainVerdict:
    """Refined lower bound: quarter-sum-of-squares <= middle term <= omega^2."""
    m = as_matrix(a)
    if omega is None:
        omega = numerical_radius(m, theta_grid=theta_grid).omega
    stmt, _ = final_middle_terms(m, omega=omega)
    left = squared_lower_01(m)
    middle = _bv("lower.final_refined", stmt)
    right = _quantity("omega_squared", omega ** 2, target="omega_squared")
    return _chain("lower_refinement_final", [(left, middle), (middle, right)], rel)


# ---------------------------------------------------------------------------
# catalog


def catalog_names() -> list[str]:
    return sorted(CATALOG_SPEC)


def evaluate_catalog(a, omega: float | None = None, theta_grid: int = 1024,
                     v_grid: int = 65) -> dict[str, BoundValue]:
    """Evaluate every registered bound for one matrix, sharing |A| and |A*|."""
    m = as_matrix(a)
    if omega is None:
        omega = numerical_radius(m, theta_grid=theta_grid).omega
    pa, ps = abs_op(m), abs_op(adjoint(m))
    nrm = op_norm(m)
    sumsq_norm = herm_top_eig(_sum_squares(m))
    min29_val, _ = _min29(pa, ps, v_grid, 1e-10)
    w_prod = numerical_radius(pa.entries @ ps.entries, theta_grid=theta_grid).omega
    stmt, _ = final_middle_terms(m, omega=omega)
    out = {
        "lower.half_norm": _bv("lower.half_norm", 0.5 * nrm),
        "upper.norm": _bv("upper.norm", nrm),
        "upper.kittaneh02": _bv("upper.kittaneh02",
                                0.5 * (nrm + np.sqrt(op_norm(m @ m)))),
        "upper.kittaneh07": _bv("upper.kittaneh07",
                                0.5 * herm_top_eig(pa.entries + ps.entries)),
        "upper.min_v_29": _bv("upper.min_v_29", min29_val),
        "upper.corollary_29": corollary_after_29(m, 0.5),
        "upper.sq04": _bv("upper.sq04", 0.5 * sumsq_norm),
        "lower.quarter_sum_squares": _bv("lower.quarter_sum_squares", 0.25 * sumsq_norm),
        "upper.eq25": _eq25(m, pa, ps),
        "upper.satary24": _bv("upper.satary24", 0.25 * sumsq_norm + 0.5 * w_prod),
        "lower.final_refined": _bv("lower.final_refined", stmt),
    }
    for v in THEOREM8_VS:
        refined, relaxed = _theorem8(pa, ps, power_pair(v))
        out[refined.name] = refined
        out[relaxed.name] = relaxed
    return out


def bound_slack(bv: BoundValue, omega: float) -> float:
    """Sign-adjusted slack: nonnegative iff the bound holds against omega."""
    target = omega if bv.target == "omega" else omega ** 2
    return bv.value - target if bv.side == "upper" else target - bv.value
