"""Dense real eigenvalue solver: balance, Hessenberg reduction, QR.

Classic EISPACK-lineage pipeline (balanc / elmhes / hqr): the matrix is
balanced by diagonal similarity scaling, reduced to upper Hessenberg
form with stabilized elementary transforms, then driven to quasi-
triangular form by the implicit double-shift QR iteration with
exceptional shifts every ten stalled steps.  Eigenvalues come from the
1x1 and 2x2 diagonal blocks; complex pairs are returned conjugated.

Kept dependency-light on purpose: this backs the sweep-matrix oracle
that validates every closed-form relaxation parameter, so it must not
share code with anything it checks.
"""

import numpy as np

from ._numba import njit

_EPS = float(np.finfo(np.float64).eps)
_MAX_SWEEPS_PER_EIGENVALUE = 60


@njit(cache=True)
def _balance(a):
    """Diagonal similarity scaling toward equal row/column norms."""
    n = a.shape[0]
    radix = 2.0
    sqrdx = radix * radix
    done = False
    while not done:
        done = True
        for i in range(n):
            r = 0.0
            c = 0.0
            for j in range(n):
                if j != i:
                    c += abs(a[j, i])
                    r += abs(a[i, j])
            if c != 0.0 and r != 0.0:
                g = r / radix
                f = 1.0
                s = c + r
                while c < g:
                    f *= radix
                    c *= sqrdx
                g = r * radix
                while c > g:
                    f /= radix
                    c /= sqrdx
                if (c + r) / f < 0.95 * s:
                    done = False
                    g = 1.0 / f
                    for j in range(n):
                        a[i, j] *= g
                    for j in range(n):
                        a[j, i] *= f


@njit(cache=True)
def _elmhes(a):
    """Reduce to upper Hessenberg form by pivoted elimination."""
    n = a.shape[0]
    for m in range(1, n - 1):
        x = 0.0
        im = m
        for j in range(m, n):
            if abs(a[j, m - 1]) > abs(x):
                x = a[j, m - 1]
                im = j
        if im != m:
            for j in range(m - 1, n):
                tmp = a[im, j]
                a[im, j] = a[m, j]
                a[m, j] = tmp
            for j in range(n):
                tmp = a[j, im]
                a[j, im] = a[j, m]
                a[j, m] = tmp
        if x != 0.0:
            for i in range(m + 1, n):
                y = a[i, m - 1]
                if y != 0.0:
                    y /= x
                    a[i, m - 1] = y
                    for j in range(m, n):
                        a[i, j] -= y * a[m, j]
                    for j in range(n):
                        a[j, m] += y * a[j, i]
    for i in range(2, n):
        for j in range(i - 1):
            a[i, j] = 0.0


@njit(cache=True)
def _hqr(a, wr, wi):
    """Double-shift QR on an upper Hessenberg matrix; fills wr/wi.

    Returns 0 on success, 1 if some eigenvalue failed to deflate within
    the iteration budget.
    """
    n = a.shape[0]
    anorm = 0.0
    for i in range(n):
        lo = i - 1 if i > 0 else 0
        for j in range(lo, n):
            anorm += abs(a[i, j])
    nn = n - 1
    t = 0.0
    while nn >= 0:
        its = 0
        while True:
            l = nn
            while l >= 1:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) <= _EPS * s:
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = np.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + (z if p >= 0.0 else -z)
                    wr[nn - 1] = x + z
                    wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                    wi[nn - 1] = 0.0
                    wi[nn] = 0.0
                else:
                    wr[nn - 1] = x + p
                    wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break
            if its == _MAX_SWEEPS_PER_EIGENVALUE:
                return 1
            if its > 0 and its % 10 == 0:
                t += x
                for i in range(nn + 1):
                    a[i, i] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                y = 0.75 * s
                x = y
                w = -0.4375 * s * s
            its += 1
            m = nn - 2
            while m >= l:
                z = a[m, m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - r - s
                r = a[m + 2, m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                if u <= _EPS * v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i, i - 2] = 0.0
            for i in range(m + 3, nn + 1):
                a[i, i - 3] = 0.0
            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = 0.0
                    if k != nn - 1:
                        r = a[k + 2, k - 1]
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = np.sqrt(p * p + q * q + r * r)
                if p < 0.0:
                    s = -s
                if s != 0.0:
                    if k == m:
                        if l != m:
                            a[k, k - 1] = -a[k, k - 1]
                    else:
                        a[k, k - 1] = -s * x
                    p += s
                    x = p / s
                    y = q / s
                    z = r / s
                    q /= p
                    r /= p
                    for j in range(k, nn + 1):
                        p = a[k, j] + q * a[k + 1, j]
                        if k != nn - 1:
                            p += r * a[k + 2, j]
                            a[k + 2, j] -= p * z
                        a[k + 1, j] -= p * y
                        a[k, j] -= p * x
                    mmin = nn if nn < k + 3 else k + 3
                    for i in range(l, mmin + 1):
                        p = x * a[i, k] + y * a[i, k + 1]
                        if k != nn - 1:
                            p += z * a[i, k + 2]
                            a[i, k + 2] -= p * r
                        a[i, k + 1] -= p * q
                        a[i, k] -= p
    return 0


def eigvals(matrix):
    """All eigenvalues of a real square matrix as a complex array.

    Raises RuntimeError if the QR iteration fails to deflate (extremely
    pathological input).
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return np.empty(0, dtype=complex)
    if n == 1:
        return np.array([a[0, 0]], dtype=complex)
    _balance(a)
    _elmhes(a)
    wr = np.empty(n)
    wi = np.empty(n)
    if _hqr(a, wr, wi) != 0:
        raise RuntimeError("QR eigenvalue iteration failed to converge")
    return wr + 1j * wi
