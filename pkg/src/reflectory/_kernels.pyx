# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: small dense complex LU, phi-conjugation and
factor-product evaluation.

Semantics match ``reflectory._kernels_py`` exactly; the test-suite runs both.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

ctypedef double complex cplx


cdef inline double cabs1(cplx x) nogil:
    return fabs(x.real) + fabs(x.imag)


cdef inline double cabs(cplx x) nogil:
    return sqrt(x.real * x.real + x.imag * x.imag)


cdef int lu_inverse(cplx[:, ::1] A, cplx[:, ::1] inv, cplx[:, ::1] work,
                    Py_ssize_t[::1] piv) nogil:
    """Partial-pivoting LU of A (copied into work), then inv = A^-1.

    Returns 0 on success, 1 on an exactly zero pivot.
    """
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t i, j, k, p
    cdef double best, v
    cdef cplx t, s
    for i in range(n):
        piv[i] = i
        for j in range(n):
            work[i, j] = A[i, j]
    for k in range(n):
        p = k
        best = cabs(work[k, k])
        for i in range(k + 1, n):
            v = cabs(work[i, k])
            if v > best:
                best = v
                p = i
        if best == 0.0:
            return 1
        if p != k:
            for j in range(n):
                t = work[k, j]
                work[k, j] = work[p, j]
                work[p, j] = t
            i = piv[k]
            piv[k] = piv[p]
            piv[p] = i
        for i in range(k + 1, n):
            work[i, k] = work[i, k] / work[k, k]
            t = work[i, k]
            for j in range(k + 1, n):
                work[i, j] = work[i, j] - t * work[k, j]
    # solve A X = I column by column; row permutation applied to identity
    for j in range(n):
        for i in range(n):
            inv[i, j] = 1.0 if piv[i] == j else 0.0
        for i in range(n):
            s = inv[i, j]
            for k in range(i):
                s = s - work[i, k] * inv[k, j]
            inv[i, j] = s
        for i in range(n - 1, -1, -1):
            s = inv[i, j]
            for k in range(i + 1, n):
                s = s - work[i, k] * inv[k, j]
            inv[i, j] = s / work[i, i]
    return 0


cdef double norm1(cplx[:, ::1] A) nogil:
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t i, j
    cdef double best = 0.0, col
    for j in range(n):
        col = 0.0
        for i in range(n):
            col += cabs(A[i, j])
        if col > best:
            best = col
    return best


cdef void conj_sym(cplx[:, ::1] phi, cplx[:, ::1] P, cplx[:, ::1] inv,
                   cplx[:, ::1] tmp, cplx[:, ::1] out) nogil:
    """out = sym(phi P inv), sym(X) = (X + X^*)/2."""
    cdef Py_ssize_t n = phi.shape[0]
    cdef Py_ssize_t i, j, k
    cdef cplx s
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s = s + phi[i, k] * P[k, j]
            tmp[i, j] = s
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s = s + tmp[i, k] * inv[k, j]
            out[i, j] = s
    for i in range(n):
        out[i, i] = out[i, i].real
        for j in range(i + 1, n):
            s = 0.5 * (out[i, j] + out[j, i].conjugate())
            out[i, j] = s
            out[j, i] = s.conjugate()


def conjugate(phi, P):
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] a = np.ascontiguousarray(phi, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] p = np.ascontiguousarray(P, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0]
    inv = np.empty((n, n), dtype=np.complex128)
    work = np.empty((n, n), dtype=np.complex128)
    tmp = np.empty((n, n), dtype=np.complex128)
    out = np.zeros((n, n), dtype=np.complex128)
    piv = np.empty(n, dtype=np.intp)
    cdef double rcond
    if lu_inverse(a, inv, work, piv):
        return out, 0.0
    rcond = 1.0 / (norm1(a) * norm1(inv))
    conj_sym(a, p, inv, tmp, out)
    return out, rcond


def refactor_pair(cplx a1, P1, cplx a2, P2):
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] p1 = np.ascontiguousarray(P1, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] p2 = np.ascontiguousarray(P2, dtype=np.complex128)
    cdef Py_ssize_t n = p1.shape[0]
    cdef Py_ssize_t i, j
    cdef cplx c0 = a2 - a1.conjugate()
    cdef cplx c2 = a2.conjugate() - a2
    cdef cplx c1 = a1.conjugate() - a1
    phi = np.empty((n, n), dtype=np.complex128)
    cdef cplx[:, ::1] f = phi
    for i in range(n):
        for j in range(n):
            f[i, j] = c2 * p2[i, j] + c1 * p1[i, j]
        f[i, i] = f[i, i] + c0
    inv = np.empty((n, n), dtype=np.complex128)
    work = np.empty((n, n), dtype=np.complex128)
    tmp = np.empty((n, n), dtype=np.complex128)
    q1 = np.zeros((n, n), dtype=np.complex128)
    q2 = np.zeros((n, n), dtype=np.complex128)
    piv = np.empty(n, dtype=np.intp)
    if lu_inverse(f, inv, work, piv):
        return q1, q2, phi, 0.0
    cdef double rcond = 1.0 / (norm1(f) * norm1(inv))
    conj_sym(f, p1, inv, tmp, q1)
    conj_sym(f, p2, inv, tmp, q2)
    return q1, q2, phi, rcond


cdef void eval_into(cplx[::1] alphas, cplx[:, :, ::1] projs, cplx z,
                    cplx[:, ::1] out, cplx[:, ::1] tmp) nogil:
    cdef Py_ssize_t m = projs.shape[0]
    cdef Py_ssize_t n = projs.shape[1]
    cdef Py_ssize_t f, i, j, k
    cdef cplx a, ab, c, s
    for i in range(n):
        for j in range(n):
            out[i, j] = 1.0 if i == j else 0.0
    for f in range(m):
        a = alphas[f]
        ab = a.conjugate()
        c = (ab - a) / (z - ab)
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    s = s + out[i, k] * projs[f, k, j]
                tmp[i, j] = s
        for i in range(n):
            for j in range(n):
                out[i, j] = out[i, j] + c * tmp[i, j]


def _as_stack(projectors, Py_ssize_t n):
    arr = np.ascontiguousarray(projectors, dtype=np.complex128)
    if arr.size == 0:
        return np.zeros((0, n, n), dtype=np.complex128)
    return arr


def eval_product(alphas, projectors, cplx z):
    projs = np.ascontiguousarray(projectors, dtype=np.complex128)
    cdef Py_ssize_t n = projs.shape[projs.ndim - 1]
    projs = _as_stack(projs, n)
    al = np.ascontiguousarray(alphas, dtype=np.complex128).reshape(-1)
    out = np.empty((n, n), dtype=np.complex128)
    tmp = np.empty((n, n), dtype=np.complex128)
    eval_into(al, projs, z, out, tmp)
    return out


def product_discrepancy(alphas_a, projs_a, alphas_b, projs_b, zs):
    pa = np.ascontiguousarray(projs_a, dtype=np.complex128)
    pb = np.ascontiguousarray(projs_b, dtype=np.complex128)
    cdef Py_ssize_t n = pa.shape[pa.ndim - 1]
    pa = _as_stack(pa, n)
    pb = _as_stack(pb, n)
    cdef cplx[::1] aa = np.ascontiguousarray(alphas_a, dtype=np.complex128).reshape(-1)
    cdef cplx[::1] ab = np.ascontiguousarray(alphas_b, dtype=np.complex128).reshape(-1)
    cdef cplx[::1] zz = np.ascontiguousarray(zs, dtype=np.complex128).reshape(-1)
    cdef cplx[:, :, ::1] va = pa
    cdef cplx[:, :, ::1] vb = pb
    ea = np.empty((n, n), dtype=np.complex128)
    eb = np.empty((n, n), dtype=np.complex128)
    tmp = np.empty((n, n), dtype=np.complex128)
    cdef cplx[:, ::1] xa = ea
    cdef cplx[:, ::1] xb = eb
    cdef cplx[:, ::1] xt = tmp
    cdef double worst = 0.0, acc
    cdef cplx d
    cdef Py_ssize_t q, i, j
    for q in range(zz.shape[0]):
        eval_into(aa, va, zz[q], xa, xt)
        eval_into(ab, vb, zz[q], xb, xt)
        acc = 0.0
        for i in range(n):
            for j in range(n):
                d = xa[i, j] - xb[i, j]
                acc += d.real * d.real + d.imag * d.imag
        acc = sqrt(acc)
        if acc > worst:
            worst = acc
    return worst
