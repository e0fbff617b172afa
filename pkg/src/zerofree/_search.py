import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(f, lo, hi, tol=1e-10):
    """Golden-section search for a minimiser of a unimodal ``f`` on [lo, hi].

    Returns ``(x, f(x))`` with the bracket narrowed below ``tol``.
    """
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def bisect_boundary(pred, lo, hi, tol=1e-12, max_iter=200):
    """Largest x in [lo, hi] (to ``tol``) with ``pred(x)`` true.

    ``pred`` must be true at ``lo`` and monotone (true then false).
    """
    if pred(hi):
        return hi
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return lo
