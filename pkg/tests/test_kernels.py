"""Agreement between the compiled eigenvalue kernel and the numpy fallback."""

import os

import numpy as np
import pytest

from radius_bounds import _backend, _kernels_py

from conftest import random_complex

try:
    from radius_bounds import _kernels
except ImportError:
    _kernels = None

needs_compiled = pytest.mark.skipif(_kernels is None,
                                    reason="compiled extension not built")

THETAS = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)


def test_fallback_matches_direct_eigvalsh(rng):
    a = random_complex(rng, 5)
    got = _kernels_py.rotated_top_eigs(a, THETAS)
    for t, val in zip(THETAS, got):
        h = 0.5 * (np.exp(1j * t) * a + np.exp(-1j * t) * a.conj().T)
        assert val == pytest.approx(np.linalg.eigvalsh(h)[-1], abs=1e-12)


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12])
def test_compiled_matches_fallback(rng, n):
    for _ in range(5):
        a = random_complex(rng, n)
        got = _kernels.rotated_top_eigs(np.ascontiguousarray(a.real),
                                        np.ascontiguousarray(a.imag), THETAS)
        want = _kernels_py.rotated_top_eigs(a, THETAS)
        assert np.allclose(got, want, atol=1e-12)


@needs_compiled
def test_compiled_diagonal_case():
    a = np.diag([1.0 + 0j, -3.0, 2.0])
    got = _kernels.rotated_top_eigs(np.ascontiguousarray(a.real),
                                    np.ascontiguousarray(a.imag),
                                    np.array([0.0, np.pi]))
    # at theta = 0 the rotated part is Re(diag), at pi it is negated
    assert got == pytest.approx([2.0, 3.0], abs=1e-13)


@needs_compiled
def test_compiled_hermitian_spectrum(rng):
    g = random_complex(rng, 6)
    h = 0.5 * (g + g.conj().T)
    got = _kernels.rotated_top_eigs(np.ascontiguousarray(h.real),
                                    np.ascontiguousarray(h.imag),
                                    np.array([0.0]))
    assert got[0] == pytest.approx(np.linalg.eigvalsh(h)[-1], abs=1e-12)


def test_backend_router_consistency(rng):
    for n in (2, 4, 7, 10):
        a = random_complex(rng, n)
        got = _backend.rotated_top_eigs(a, THETAS)
        want = _kernels_py.rotated_top_eigs(a, THETAS)
        assert np.allclose(got, want, atol=1e-11)


def test_rotated_eval_matches_batch(rng):
    a = random_complex(rng, 4)
    f = _backend.rotated_eval(a)
    batch = _backend.rotated_top_eigs(a, THETAS)
    for t, val in zip(THETAS, batch):
        assert f(float(t)) == pytest.approx(val, abs=1e-11)


def test_backend_name_reports_mode():
    assert _backend.backend_name() in ("compiled", "python")
    if _kernels is not None and not os.environ.get("RADIUS_BOUNDS_PURE"):
        assert _backend.backend_name() == "compiled"
