"""Pure-Python Hermitian eigensolver kernel.

Householder tridiagonalization with a unitary phase pass, then implicit-shift
QL with eigenvector accumulation.  The compiled twin (_eigen_cy) performs the
same operations in the same order; keep the two in lockstep when editing.

No LAPACK anywhere: determinism and auditability are the point.  Magnitudes
are plain sqrt(re*re + im*im) and complex-by-real divisions are reciprocal
multiplies so both kernels round identically.
"""
from __future__ import annotations

from math import copysign, sqrt

import numpy as np

EPS = 2.220446049250313e-16
MAX_QL_SWEEPS = 60


def solve(a_in: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvectors of a Hermitian matrix (unsorted).

    Returns (d, q) with q's columns the eigenvectors.  The input must already
    be exactly Hermitian; callers own validation and sorting.
    """
    n = len(a_in)
    a = [[complex(a_in[i][j]) for j in range(n)] for i in range(n)]
    q = [[1 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    d = [0.0] * n
    e = [0.0] * n
    if n:
        _tridiagonalize(a, q, d, e, n)
        _implicit_ql(d, e, q, n)
    dv = np.array(d, dtype=np.float64)
    qv = np.array(q, dtype=np.complex128) if n else np.zeros((0, 0), dtype=np.complex128)
    return dv, qv


def _hyp(x: float, y: float) -> float:
    return sqrt(x * x + y * y)


def _tridiagonalize(a, q, d, e, n):
    """Reduce a to real symmetric tridiagonal form, accumulating the unitary in q.

    On return d holds the diagonal and e[i] >= 0 couples (i, i+1) with
    e[n-1] == 0.  The complex subdiagonal phases are pushed into q's columns.
    """
    t = [0j] * n  # complex subdiagonal before the phase pass
    for k in range(n - 2):
        xnorm2 = 0.0
        for i in range(k + 1, n):
            z = a[i][k]
            xnorm2 += z.real * z.real + z.imag * z.imag
        if xnorm2 == 0.0:
            t[k] = 0j
            continue
        xnorm = sqrt(xnorm2)
        x0 = a[k + 1][k]
        ax0 = sqrt(x0.real * x0.real + x0.imag * x0.imag)
        if ax0 > 0.0:
            phase = x0 * (1.0 / ax0)
        else:
            phase = 1 + 0j
        alpha = -xnorm * phase
        m = n - k - 1
        v = [a[k + 1 + i][k] for i in range(m)]
        v[0] -= alpha
        vv = 0.0
        for z in v:
            vv += z.real * z.real + z.imag * z.imag
        beta = 2.0 / vv
        # p = beta * S v on the trailing block S = a[k+1:, k+1:]
        p = [0j] * m
        for i in range(m):
            row = a[k + 1 + i]
            acc = 0j
            for j in range(m):
                acc += row[k + 1 + j] * v[j]
            p[i] = beta * acc
        kr = 0.0
        for i in range(m):
            z = v[i].conjugate() * p[i]
            kr += z.real
        kappa = 0.5 * beta * kr
        w = [p[i] - kappa * v[i] for i in range(m)]
        # rank-2 Hermitian update S -= v w* + w v*
        for i in range(m):
            row = a[k + 1 + i]
            vi = v[i]
            wi = w[i]
            for j in range(m):
                row[k + 1 + j] -= vi * w[j].conjugate() + wi * v[j].conjugate()
        a[k + 1][k] = alpha
        for i in range(k + 2, n):
            a[i][k] = 0j
        t[k] = alpha
        # accumulate: Q <- Q * (I - beta v v*) on columns k+1..
        for r in range(n):
            qrow = q[r]
            acc = 0j
            for j in range(m):
                acc += qrow[k + 1 + j] * v[j]
            f = beta * acc
            for j in range(m):
                qrow[k + 1 + j] -= f * v[j].conjugate()
    if n >= 2:
        t[n - 2] = a[n - 1][n - 2]
    for i in range(n):
        d[i] = a[i][i].real
    # phase pass: diagonal unitary making the subdiagonal real nonnegative
    u = 1 + 0j
    for i in range(n - 1):
        ti = t[i]
        mag = sqrt(ti.real * ti.real + ti.imag * ti.imag)
        e[i] = mag
        if mag > 0.0:
            u = (ti * u) * (1.0 / mag)
        for r in range(n):
            q[r][i + 1] *= u
    e[n - 1] = 0.0


def _implicit_ql(d, e, q, n):
    """Implicit-shift QL on the real tridiagonal (d, e), rotating q's columns."""
    for l in range(n):
        its = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            if its == MAX_QL_SWEEPS:
                raise RuntimeError(
                    f"eigenvalue {l} not converged after {MAX_QL_SWEEPS} QL sweeps; "
                    f"off-diagonal residual {abs(e[l])!r}"
                )
            its += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = _hyp(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            zeroed = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = _hyp(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    zeroed = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                for row in q:
                    f2 = row[i + 1]
                    row[i + 1] = s * row[i] + c * f2
                    row[i] = c * row[i] - s * f2
            if zeroed:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
