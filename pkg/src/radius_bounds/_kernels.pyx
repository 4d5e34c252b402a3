# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernel: top eigenvalue of rotated Hermitian parts.

For each angle t the complex Hermitian matrix H(t) = (e^{it}A + e^{-it}A*)/2
is diagonalized in place by a cyclic Jacobi sweep with complex Givens
rotations (the off-diagonal phase is absorbed before each plane rotation).
Eigenvalues only, no eigenvector accumulation.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin, sqrt

cnp.import_array()

cdef int MAX_SWEEPS = 60


cdef double _jacobi_max_eig(double[:, ::1] hr, double[:, ::1] hi, int n,
                            int* fail) nogil:
    cdef int p, q, k, sweep
    cdef double app, aqq, rr, tau, t, c, s
    cdef double cph, sph, bqr, bqi, xr, xi
    cdef double off, scale, tol, best

    scale = 0.0
    for p in range(n):
        for q in range(n):
            scale += hr[p, q] * hr[p, q] + hi[p, q] * hi[p, q]
    scale = sqrt(scale)
    if scale == 0.0:
        fail[0] = 0
        return 0.0
    tol = 1e-15 * scale

    fail[0] = 1
    for sweep in range(MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += hr[p, q] * hr[p, q] + hi[p, q] * hi[p, q]
        off = sqrt(2.0 * off)
        if off <= tol:
            fail[0] = 0
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                rr = sqrt(hr[p, q] * hr[p, q] + hi[p, q] * hi[p, q])
                if rr <= 1e-300:
                    continue
                # phase e^{-i phi} = conj(h_pq) / |h_pq|
                cph = hr[p, q] / rr
                sph = -hi[p, q] / rr
                app = hr[p, p]
                aqq = hr[q, q]
                tau = (aqq - app) / (2.0 * rr)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                hr[p, p] = app - t * rr
                hr[q, q] = aqq + t * rr
                hr[p, q] = 0.0
                hi[p, q] = 0.0
                hr[q, p] = 0.0
                hi[q, p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    # b_kq = h_kq * e^{-i phi}
                    bqr = hr[k, q] * cph - hi[k, q] * sph
                    bqi = hr[k, q] * sph + hi[k, q] * cph
                    xr = hr[k, p]
                    xi = hi[k, p]
                    hr[k, p] = c * xr - s * bqr
                    hi[k, p] = c * xi - s * bqi
                    hr[k, q] = s * xr + c * bqr
                    hi[k, q] = s * xi + c * bqi
                    hr[p, k] = hr[k, p]
                    hi[p, k] = -hi[k, p]
                    hr[q, k] = hr[k, q]
                    hi[q, k] = -hi[k, q]

    best = hr[0, 0]
    for k in range(1, n):
        if hr[k, k] > best:
            best = hr[k, k]
    return best


def rotated_top_eigs(cnp.ndarray re_in, cnp.ndarray im_in, cnp.ndarray thetas_in):
    """Largest eigenvalue of (e^{it}A + e^{-it}A*)/2 for each angle t.

    ``re_in``/``im_in`` are the real and imaginary parts of A (n x n float64);
    returns a float64 array aligned with ``thetas_in``.  Raises
    RuntimeError("no convergence") if the Jacobi sweep cap is hit.
    """
    cdef double[:, ::1] R = np.ascontiguousarray(re_in, dtype=np.float64)
    cdef double[:, ::1] I = np.ascontiguousarray(im_in, dtype=np.float64)
    cdef double[::1] thetas = np.ascontiguousarray(thetas_in, dtype=np.float64)
    cdef int n = R.shape[0]
    cdef int m = thetas.shape[0]
    cdef cnp.ndarray out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef cnp.ndarray hr_arr = np.empty((n, n), dtype=np.float64)
    cdef cnp.ndarray hi_arr = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] hr = hr_arr
    cdef double[:, ::1] hi = hi_arr
    cdef int i, j, k, fail
    cdef double ct, st

    fail = 0
    with nogil:
        for k in range(m):
            ct = cos(thetas[k])
            st = sin(thetas[k])
            for i in range(n):
                for j in range(n):
                    # Hermitian part of e^{it}A: X = cos*R - sin*I, Y = sin*R + cos*I
                    hr[i, j] = 0.5 * (ct * (R[i, j] + R[j, i]) - st * (I[i, j] + I[j, i]))
                    hi[i, j] = 0.5 * (st * (R[i, j] - R[j, i]) + ct * (I[i, j] - I[j, i]))
            out[k] = _jacobi_max_eig(hr, hi, n, &fail)
            if fail:
                break
    if fail:
        raise RuntimeError("no convergence")
    return out_arr
