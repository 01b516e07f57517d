# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Hermitian eigensolver kernel.

Line-for-line twin of _eigen_py: same Householder + phase pass + implicit QL,
same operation order, plain sqrt magnitudes, reciprocal multiplies instead of
complex division.  Keep the two implementations in lockstep when editing.
"""
import numpy as np

from libc.math cimport copysign, fabs, sqrt

cdef extern from "complex.h" nogil:
    double complex conj(double complex)

cdef double EPS = 2.220446049250313e-16
cdef int MAX_QL_SWEEPS = 60


def solve(a_in):
    """Eigenvalues and eigenvectors of a Hermitian matrix (unsorted)."""
    a = np.array(a_in, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = a.shape[0]
    d = np.zeros(n, dtype=np.float64)
    e = np.zeros(n, dtype=np.float64)
    q = np.eye(n, dtype=np.complex128) if n else np.zeros((0, 0), dtype=np.complex128)
    if n:
        v = np.zeros(n, dtype=np.complex128)
        p = np.zeros(n, dtype=np.complex128)
        w = np.zeros(n, dtype=np.complex128)
        _tridiagonalize(a, q, d, e, v, p, w, n)
        _implicit_ql(d, e, q, n)
    return d, q


cdef int _tridiagonalize(double complex[:, ::1] a, double complex[:, ::1] q,
                         double[::1] d, double[::1] e,
                         double complex[::1] v, double complex[::1] p,
                         double complex[::1] w, Py_ssize_t n) except -1:
    cdef Py_ssize_t k, i, j, r, m
    cdef double xnorm2, xnorm, ax0, vv, kr, beta, kappa, mag
    cdef double complex z, x0, phase, alpha, acc, f, vi, wi, ti, u
    tbuf = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] tv = tbuf
    for k in range(n - 2):
        xnorm2 = 0.0
        for i in range(k + 1, n):
            z = a[i, k]
            xnorm2 += z.real * z.real + z.imag * z.imag
        if xnorm2 == 0.0:
            tv[k] = 0
            continue
        xnorm = sqrt(xnorm2)
        x0 = a[k + 1, k]
        ax0 = sqrt(x0.real * x0.real + x0.imag * x0.imag)
        if ax0 > 0.0:
            phase = x0 * (1.0 / ax0)
        else:
            phase = 1
        alpha = -xnorm * phase
        m = n - k - 1
        for i in range(m):
            v[i] = a[k + 1 + i, k]
        v[0] = v[0] - alpha
        vv = 0.0
        for i in range(m):
            z = v[i]
            vv += z.real * z.real + z.imag * z.imag
        beta = 2.0 / vv
        for i in range(m):
            acc = 0
            for j in range(m):
                acc = acc + a[k + 1 + i, k + 1 + j] * v[j]
            p[i] = beta * acc
        kr = 0.0
        for i in range(m):
            z = conj(v[i]) * p[i]
            kr += z.real
        kappa = 0.5 * beta * kr
        for i in range(m):
            w[i] = p[i] - kappa * v[i]
        for i in range(m):
            vi = v[i]
            wi = w[i]
            for j in range(m):
                a[k + 1 + i, k + 1 + j] = a[k + 1 + i, k + 1 + j] - (vi * conj(w[j]) + wi * conj(v[j]))
        a[k + 1, k] = alpha
        for i in range(k + 2, n):
            a[i, k] = 0
        tv[k] = alpha
        for r in range(n):
            acc = 0
            for j in range(m):
                acc = acc + q[r, k + 1 + j] * v[j]
            f = beta * acc
            for j in range(m):
                q[r, k + 1 + j] = q[r, k + 1 + j] - f * conj(v[j])
    if n >= 2:
        tv[n - 2] = a[n - 1, n - 2]
    for i in range(n):
        d[i] = a[i, i].real
    u = 1
    for i in range(n - 1):
        ti = tv[i]
        mag = sqrt(ti.real * ti.real + ti.imag * ti.imag)
        e[i] = mag
        if mag > 0.0:
            u = (ti * u) * (1.0 / mag)
        for r in range(n):
            q[r, i + 1] = q[r, i + 1] * u
    e[n - 1] = 0.0
    return 0


cdef int _implicit_ql(double[::1] d, double[::1] e, double complex[:, ::1] q,
                      Py_ssize_t n) except -1:
    cdef Py_ssize_t l, m, i, k
    cdef int its, zeroed
    cdef double dd, g, r, s, c, p, f, b
    cdef double complex f2
    for l in range(n):
        its = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            if its == MAX_QL_SWEEPS:
                raise RuntimeError(
                    "eigenvalue %d not converged after %d QL sweeps; "
                    "off-diagonal residual %r" % (l, MAX_QL_SWEEPS, fabs(e[l]))
                )
            its += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = sqrt(g * g + 1.0)
            g = d[m] - d[l] + e[l] / (g + copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            zeroed = 0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = sqrt(f * f + g * g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    zeroed = 1
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                for k in range(n):
                    f2 = q[k, i + 1]
                    q[k, i + 1] = s * q[k, i] + c * f2
                    q[k, i] = c * q[k, i] - s * f2
            if zeroed:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return 0
