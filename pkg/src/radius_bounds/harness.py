"""Random and structured matrix generation, batch trial execution across the
bound catalog, tightness statistics, and witness search.

Per-matrix seeds derive from (run seed, family, dim, index) through numpy's
SeedSequence, so trial order and parallel scheduling cannot change any
generated matrix.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .errors import UnsupportedDim, WitnessNotFound
from .linalg import adjoint, as_matrix
from .radius import numerical_radius

FAMILIES = ("ginibre", "normal", "nilpotent", "weighted_shift", "hermitian",
            "unitary_similarity")
_FAMILY_ID = {name: i for i, name in enumerate(FAMILIES)}

# the worked 3x3 weighted shift with weights (1, 2)
EXAMPLE_MATRIX = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)

CHAIN_NAMES = ("chain_26", "reverse_power", "triangle_refinement",
               "lower_refinement_final")


@dataclass(frozen=True)
class TrialConfig:
    family: str = "ginibre"
    dims: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8)
    trials: int = 100
    seed: int = 0
    tol_rel: float = 1e-8
    v_grid: int = 65
    theta_grid: int = 1024

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError("dims must all be >= 1")
        if not 0.0 < self.tol_rel <= 1e-2:
            raise ValueError("tol_rel must lie in (0, 1e-2]")


@dataclass(frozen=True)
class TightnessRecord:
    matrix_id: str
    dim: int
    omega: float
    bound_values: dict[str, float]
    slack: dict[str, float]
    chains: dict[str, float]  # min link slack per chain verifier


def _ginibre(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return g / np.sqrt(2.0 * dim)


def _haar_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(_ginibre(rng, dim))
    d = np.diagonal(r)
    return q * (d / np.abs(np.where(d == 0, 1.0, d)))


def _shift_from_weights(weights: np.ndarray) -> np.ndarray:
    dim = len(weights) + 1
    a = np.zeros((dim, dim), dtype=complex)
    a[np.arange(dim - 1), np.arange(1, dim)] = weights
    return a


def generate(family: str, dim: int, seed: int) -> np.ndarray:
    """Deterministic matrix from (family, dim, seed).

    weighted_shift with seed 0 is the canonical fixture: superdiagonal
    weights 1, 2, ..., dim-1 (the worked 3x3 example at dim 3).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(_FAMILY_ID[family], dim)))
    if family == "ginibre":
        return _ginibre(rng, dim)
    if family == "hermitian":
        g = _ginibre(rng, dim)
        return 0.5 * (g + g.conj().T)
    if family == "normal":
        lam = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        u = _haar_unitary(rng, dim)
        return (u * lam) @ u.conj().T
    if family == "nilpotent":
        if dim < 2:
            raise UnsupportedDim("nilpotent family needs dim >= 2")
        k = dim // 2
        a = np.zeros((dim, dim), dtype=complex)
        a[:k, k:] = (rng.standard_normal((k, dim - k))
                     + 1j * rng.standard_normal((k, dim - k)))
        return a
    if family == "weighted_shift":
        if dim == 1:
            return np.zeros((1, 1), dtype=complex)
        if seed == 0:
            return _shift_from_weights(np.arange(1, dim, dtype=float))
        return _shift_from_weights(rng.uniform(0.5, 2.0, dim - 1))
    # unitary_similarity: the fixture conjugated by a random unitary
    base = np.zeros((dim, dim), dtype=complex)
    k = min(dim, 3)
    base[:k, :k] = EXAMPLE_MATRIX[:k, :k]
    u = _haar_unitary(rng, dim)
    return u.conj().T @ base @ u


def _child_seed(run_seed: int, family: str, dim: int, index: int) -> int:
    # fixture convention: index 0 of weighted_shift is the canonical shift
    if family == "weighted_shift" and index == 0:
        return 0
    ss = np.random.SeedSequence(run_seed, spawn_key=(_FAMILY_ID[family], dim, index))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def evaluate_matrix(a, matrix_id: str, cfg: TrialConfig) -> TightnessRecord:
    """Exact omega, every catalog bound, and all chain verifiers for one matrix."""
    m = as_matrix(a)
    omega = numerical_radius(m, theta_grid=cfg.theta_grid).omega
    values = bounds.evaluate_catalog(m, omega=omega, theta_grid=cfg.theta_grid,
                                     v_grid=cfg.v_grid)
    slack = {name: bounds.bound_slack(bv, omega) for name, bv in values.items()}
    verdicts = [
        bounds.chain_26(m, omega=omega, rel=cfg.tol_rel),
        bounds.reverse_power_bound(m, omega=omega, theta_grid=cfg.theta_grid,
                                   rel=cfg.tol_rel),
        bounds.triangle_refinement_6(m, adjoint(m), rel=cfg.tol_rel),
        bounds.lower_refinement_final(m, omega=omega, rel=cfg.tol_rel),
    ]
    chains = {v.chain_name: min(s for _, _, s in v.links) for v in verdicts}
    return TightnessRecord(
        matrix_id=matrix_id,
        dim=m.shape[0],
        omega=omega,
        bound_values={name: values[name].value for name in sorted(values)},
        slack={name: slack[name] for name in sorted(slack)},
        chains=chains,
    )


def _bound_tol(rec: TightnessRecord, name: str, tol_rel: float) -> float:
    bv = rec.bound_values[name]
    target = rec.omega if name in ("lower.half_norm", "upper.norm", "upper.kittaneh02",
                                   "upper.kittaneh07", "upper.min_v_29",
                                   "upper.corollary_29") else rec.omega ** 2
    return bounds.allowed_slack(max(abs(bv), abs(target)), tol_rel)


def run_suite(cfg: TrialConfig) -> tuple[list[TightnessRecord], dict]:
    """Run every trial in deterministic (dim, index) order and summarize slacks.

    Per-matrix computation failures are recorded in the summary, not raised.
    """
    records: list[TightnessRecord] = []
    errors: list[dict] = []
    for dim in cfg.dims:
        for idx in range(cfg.trials):
            seed = _child_seed(cfg.seed, cfg.family, dim, idx)
            matrix_id = f"{cfg.family}-d{dim}-i{idx}"
            try:
                a = generate(cfg.family, dim, seed)
                records.append(evaluate_matrix(a, matrix_id, cfg))
            except Exception as exc:  # aggregate, do not abort the run
                errors.append({"matrix_id": matrix_id, "error": f"{type(exc).__name__}: {exc}"})

    violations = []
    per_bound: dict[str, list[float]] = {}
    for rec in records:
        for name, s in rec.slack.items():
            per_bound.setdefault(name, []).append(s)
            if s < -_bound_tol(rec, name, cfg.tol_rel):
                violations.append({"matrix_id": rec.matrix_id, "name": name, "slack": s})
        for name, s in rec.chains.items():
            per_bound.setdefault(f"chain.{name}", []).append(s)
            if s < -bounds.allowed_slack(1.0, cfg.tol_rel):
                violations.append({"matrix_id": rec.matrix_id, "name": f"chain.{name}",
                                   "slack": s})
    summary = {
        "config": {"family": cfg.family, "dims": list(cfg.dims), "trials": cfg.trials,
                   "seed": cfg.seed, "tol_rel": cfg.tol_rel, "v_grid": cfg.v_grid,
                   "theta_grid": cfg.theta_grid},
        "n_records": len(records),
        "per_bound": {name: {"mean_slack": float(np.mean(vals)),
                             "min_slack": float(np.min(vals))}
                      for name, vals in sorted(per_bound.items())},
        "violations": violations,
        "errors": errors,
        "all_hold": not violations and not errors,
    }
    return records, summary


def find_noncomparability_witnesses(budget: int = 1000, seed: int = 0,
                                    dims: tuple[int, ...] = (2, 3, 4, 5, 6),
                                    margin: float = 1e-6) -> tuple[str, str]:
    """One matrix per direction of the (02) vs (04) non-comparability.

    The bounds are compared on the omega scale: (||A|| + ||A^2||^(1/2)) / 2
    against sqrt(|| |A|^2 + |A*|^2 || / 2).  Returns (id where (02) is
    strictly smaller, id where (04) is strictly smaller).
    """
    if budget < 100:
        raise ValueError(f"budget must be >= 100, got {budget}")
    witness_02 = witness_04 = None
    for idx in range(budget):
        dim = dims[idx % len(dims)]
        child = _child_seed(seed, "ginibre", dim, idx)
        a = generate("ginibre", dim, child)
        k02 = bounds.kittaneh_02(a).value
        s04 = np.sqrt(bounds.squared_upper_04(a).value)
        matrix_id = f"ginibre-d{dim}-i{idx}"
        if witness_02 is None and k02 < s04 - margin:
            witness_02 = matrix_id
        if witness_04 is None and s04 < k02 - margin:
            witness_04 = matrix_id
        if witness_02 and witness_04:
            return witness_02, witness_04
    raise WitnessNotFound(
        f"budget {budget} exhausted (found 02-better: {witness_02}, "
        f"04-better: {witness_04})")


# ---------------------------------------------------------------------------
# report serialization (schemas stable across runs)


def report_json(records: list[TightnessRecord], summary: dict) -> str:
    payload = {
        "summary": summary,
        "records": [
            {"matrix_id": r.matrix_id, "dim": r.dim, "omega": r.omega,
             "bound_values": r.bound_values, "slack": r.slack, "chains": r.chains}
            for r in records
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def report_csv(records: list[TightnessRecord]) -> str:
    names = sorted(records[0].bound_values) if records else bounds.catalog_names()
    chain_cols = [f"chain.{c}" for c in CHAIN_NAMES]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["matrix_id", "dim", "omega", *names, *chain_cols])
    for r in records:
        writer.writerow([r.matrix_id, r.dim, repr(r.omega),
                         *[repr(r.bound_values[n]) for n in names],
                         *[repr(r.chains[c]) for c in CHAIN_NAMES]])
    return buf.getvalue()
