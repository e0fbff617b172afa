"""numba implementations of the hot loops.

Every function here has a twin with the same signature and semantics in
``_kernels_numpy``; the two are cross-checked in the test suite.
"""
import math

import numpy as np
from numba import njit

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@njit(cache=True)
def pair_tables(re, im):
    m = re.shape[0]
    pr = np.empty((m, m))
    pi = np.empty((m, m))
    for i in range(m):
        for j in range(m):
            # z_i * conj(z_j)
            pr[i, j] = re[i] * re[j] + im[i] * im[j]
            pi[i, j] = im[i] * re[j] - re[i] * im[j]
    return pr, pi


@njit(cache=True)
def _lex_le(a0, a1, a2, a3, b0, b1, b2, b3):
    if a0 != b0:
        return a0 < b0
    if a1 != b1:
        return a1 < b1
    if a2 != b2:
        return a2 < b2
    return a3 <= b3


@njit(cache=True)
def _canonical(i, j, k, l):
    # orbit representative under (a,b,c,d) -> (b,a,d,c), (c,d,a,b), (d,c,b,a)
    return (_lex_le(i, j, k, l, j, i, l, k)
            and _lex_le(i, j, k, l, k, l, i, j)
            and _lex_le(i, j, k, l, l, k, j, i))


@njit(cache=True)
def f_sweep_max(re, im):
    """Max of F over symmetry-reduced quadruples.

    Returns ``(best, i, j, k, l, checked)``; the index tuple is the
    lexicographically first maximiser.
    """
    m = re.shape[0]
    pr, pi = pair_tables(re, im)
    best = -np.inf
    bi = bj = bk = bl = 0
    checked = 0
    for i in range(m):
        for j in range(i, m):
            for k in range(i, m):
                t = pi[j, k]
                for l in range(i, m):
                    if not _canonical(i, j, k, l):
                        continue
                    checked += 1
                    s = pi[i, l] - t
                    v = s * s - 4.0 * pr[i, k] * pr[j, l]
                    if v > best:
                        best = v
                        bi, bj, bk, bl = i, j, k, l
    return best, bi, bj, bk, bl, checked


@njit(cache=True)
def mu_many(are, aim, re, im):
    """For each probe a, max over (b, c, d) in z^3 of F(a, b, c, d)."""
    na = are.shape[0]
    m = re.shape[0]
    pr, pi = pair_tables(re, im)
    out = np.empty(na)
    arg = np.zeros((na, 3), dtype=np.int64)
    u = np.empty(m)
    w = np.empty(m)
    for p in range(na):
        for q in range(m):
            u[q] = aim[p] * re[q] - are[p] * im[q]
            w[q] = are[p] * re[q] + aim[p] * im[q]
        best = -np.inf
        for j in range(m):
            for k in range(m):
                t = pi[j, k]
                c4 = 4.0 * w[k]
                for l in range(m):
                    s = u[l] - t
                    v = s * s - c4 * pr[j, l]
                    if v > best:
                        best = v
                        arg[p, 0] = j
                        arg[p, 1] = k
                        arg[p, 2] = l
        out[p] = best
    return out, arg


@njit(cache=True)
def _absarg_ratio(a, b, c, d, z):
    num = a * z + b
    den = c * z + d
    w = num * den.conjugate()
    return abs(math.atan2(w.imag, w.real))


@njit(cache=True)
def _golden_max(a, b, c, d, e, lo, hi, n_iter):
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1 = _absarg_ratio(a, b, c, d, math.exp(x1) * e)
    f2 = _absarg_ratio(a, b, c, d, math.exp(x2) * e)
    for _ in range(n_iter):
        if f1 < f2:
            lo = x1
            x1 = x2
            f1 = f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = _absarg_ratio(a, b, c, d, math.exp(x2) * e)
        else:
            hi = x2
            x2 = x1
            f2 = f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = _absarg_ratio(a, b, c, d, math.exp(x1) * e)
    return max(f1, f2)


@njit(cache=True)
def _angle_inside(z, theta):
    return abs(math.atan2(z.imag, z.real)) <= theta + 1e-12


@njit(cache=True)
def mobius_sup_one(a, b, c, d, theta, log_r, n_iter):
    scale = max(max(abs(a), abs(b)), max(abs(c), abs(d)))
    det = a * d - b * c
    if abs(det) <= 1e-14 * scale * scale:
        # constant map
        if abs(c) > 0.0:
            w = a * c.conjugate()
        else:
            w = b * d.conjugate()
        return abs(math.atan2(w.imag, w.real))
    if abs(a) > 0.0 and _angle_inside(-b / a, theta):
        return np.inf
    if abs(c) > 0.0 and _angle_inside(-d / c, theta):
        return np.inf
    w0 = b * d.conjugate()
    w1 = a * c.conjugate()
    best = max(abs(math.atan2(w0.imag, w0.real)), abs(math.atan2(w1.imag, w1.real)))
    g = log_r.shape[0]
    for sgn in (1.0, -1.0):
        e = complex(math.cos(theta), sgn * math.sin(theta))
        ray_best = -1.0
        kb = 0
        for k in range(g):
            v = _absarg_ratio(a, b, c, d, math.exp(log_r[k]) * e)
            if v > ray_best:
                ray_best = v
                kb = k
        lo = log_r[max(kb - 1, 0)]
        hi = log_r[min(kb + 1, g - 1)]
        ref = _golden_max(a, b, c, d, e, lo, hi, n_iter)
        best = max(best, ray_best, ref)
    return best


@njit(cache=True)
def mobius_sup_batch(a, b, c, d, theta, log_r, n_iter):
    n = a.shape[0]
    out = np.empty(n)
    for i in range(n):
        out[i] = mobius_sup_one(a[i], b[i], c[i], d[i], theta, log_r, n_iter)
    return out


@njit(cache=True)
def ryser(A):
    """Permanent by Ryser inclusion-exclusion over a Gray-code column walk."""
    n = A.shape[0]
    rowsum = np.zeros(n, dtype=np.complex128)
    total = 0.0 + 0.0j
    gray = 0
    for k in range(1, 1 << n):
        # bit flipped between gray(k-1) and gray(k) is the lowest set bit of k
        j = 0
        while not (k >> j) & 1:
            j += 1
        gray ^= 1 << j
        if (gray >> j) & 1:
            for r in range(n):
                rowsum[r] += A[r, j]
        else:
            for r in range(n):
                rowsum[r] -= A[r, j]
        prod = 1.0 + 0.0j
        for r in range(n):
            prod *= rowsum[r]
        # parity of |S| alternates with every flip
        if k & 1:
            total -= prod
        else:
            total += prod
    if n & 1:
        return -total
    return total
