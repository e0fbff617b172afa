"""Vectorised numpy twins of the kernels in ``_kernels_numba``."""
import math

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

_CHUNK = 4096


def pair_tables(re, im):
    pr = re[:, None] * re[None, :] + im[:, None] * im[None, :]
    pi = im[:, None] * re[None, :] - re[:, None] * im[None, :]
    return pr, pi


def f_sweep_max(re, im):
    m = re.shape[0]
    pr, pi = pair_tables(re, im)
    best = -np.inf
    arg = (0, 0, 0, 0)
    for i in range(m):
        s = pi[i][None, None, :] - pi[:, :, None]
        block = s * s - 4.0 * pr[i][None, :, None] * pr[:, None, :]
        flat = int(np.argmax(block))
        v = block.flat[flat]
        if v > best:
            best = float(v)
            arg = (i,) + tuple(int(x) for x in np.unravel_index(flat, block.shape))
    # orbits of the order-4 symmetry group, by Burnside (each involution fixes m^2 tuples)
    checked = (m ** 4 + 3 * m ** 2) // 4
    return (best,) + arg + (checked,)


def mu_many(are, aim, re, im):
    na = are.shape[0]
    m = re.shape[0]
    pr, pi = pair_tables(re, im)
    out = np.empty(na)
    arg = np.zeros((na, 3), dtype=np.int64)
    for p in range(na):
        u = aim[p] * re - are[p] * im
        w = are[p] * re + aim[p] * im
        s = u[None, None, :] - pi[:, :, None]
        block = s * s - (4.0 * w)[None, :, None] * pr[:, None, :]
        flat = int(np.argmax(block))
        out[p] = block.flat[flat]
        arg[p] = np.unravel_index(flat, (m, m, m))
    return out, arg


def _absarg_ratio(a, b, c, d, z):
    w = (a * z + b) * np.conj(c * z + d)
    return np.abs(np.arctan2(w.imag, w.real))


def _golden_max(a, b, c, d, e, lo, hi, n_iter):
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1 = _absarg_ratio(a, b, c, d, np.exp(x1) * e)
    f2 = _absarg_ratio(a, b, c, d, np.exp(x2) * e)
    for _ in range(n_iter):
        up = f1 < f2
        lo = np.where(up, x1, lo)
        hi = np.where(up, hi, x2)
        nx1 = np.where(up, x2, hi - INV_PHI * (hi - lo))
        nx2 = np.where(up, lo + INV_PHI * (hi - lo), x1)
        fnew = _absarg_ratio(a, b, c, d, np.exp(np.where(up, nx2, nx1)) * e)
        f1, f2 = np.where(up, f2, fnew), np.where(up, fnew, f1)
        x1, x2 = nx1, nx2
    return np.maximum(f1, f2)


def _angle_inside(z, theta):
    return np.abs(np.arctan2(z.imag, z.real)) <= theta + 1e-12


def _sup_chunk(a, b, c, d, theta, log_r, n_iter):
    scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), np.maximum(np.abs(c), np.abs(d)))
    degenerate = np.abs(a * d - b * c) <= 1e-14 * scale * scale
    with np.errstate(divide="ignore", invalid="ignore"):
        zero_in = (np.abs(a) > 0) & _angle_inside(-b / a, theta)
        pole_in = (np.abs(c) > 0) & _angle_inside(-d / c, theta)
    w0 = b * np.conj(d)
    w1 = a * np.conj(c)
    lim0 = np.abs(np.arctan2(w0.imag, w0.real))
    lim1 = np.abs(np.arctan2(w1.imag, w1.real))
    best = np.maximum(lim0, lim1)
    g = log_r.shape[0]
    rows = np.arange(a.shape[0])
    r = np.exp(log_r)
    for sgn in (1.0, -1.0):
        e = complex(math.cos(theta), sgn * math.sin(theta))
        z = r[None, :] * e
        vals = _absarg_ratio(a[:, None], b[:, None], c[:, None], d[:, None], z)
        kb = np.argmax(vals, axis=1)
        ray_best = vals[rows, kb]
        lo = log_r[np.maximum(kb - 1, 0)]
        hi = log_r[np.minimum(kb + 1, g - 1)]
        ref = _golden_max(a, b, c, d, e, lo, hi, n_iter)
        best = np.maximum(best, np.maximum(ray_best, ref))
    const = np.where(np.abs(c) > 0, lim1, lim0)
    best = np.where(zero_in | pole_in, np.inf, best)
    return np.where(degenerate, const, best)


def mobius_sup_batch(a, b, c, d, theta, log_r, n_iter):
    n = a.shape[0]
    out = np.empty(n)
    for s in range(0, n, _CHUNK):
        sl = slice(s, s + _CHUNK)
        out[sl] = _sup_chunk(a[sl], b[sl], c[sl], d[sl], theta, log_r, n_iter)
    return out


def ryser(A):
    """Ryser's formula with every column subset evaluated at once."""
    n = A.shape[0]
    masks = np.arange(1, 1 << n)
    bits = (masks[:, None] >> np.arange(n)[None, :]) & 1
    rowsums = bits.astype(np.complex128) @ A.T
    sizes = bits.sum(axis=1)
    signs = np.where(sizes % 2 == 1, -1.0, 1.0)
    total = np.sum(signs * np.prod(rowsums, axis=1))
    return -total if n % 2 else total
