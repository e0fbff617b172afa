"""Time the numba kernels against the numpy fallbacks.

    python benchmarks/bench_backends.py [--repeat 3]

Each kernel is called once untimed so JIT compilation is excluded, then the
best of ``--repeat`` runs is reported.  Results are checked for agreement.
"""
import argparse
import time

import numpy as np

from zerofree import _kernels_numba as nb
from zerofree import _kernels_numpy as npk
from zerofree.criteria import _oracle_grid


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(rng):
    pts = 1.0 + 0.4 * np.exp(2j * np.pi * np.sort(rng.uniform(0, 1, 48)))
    re, im = np.ascontiguousarray(pts.real), np.ascontiguousarray(pts.imag)
    q = 1.0 + 0.3 * (rng.normal(size=(4, 5000)) + 1j * rng.normal(size=(4, 5000)))
    log_r, n_iter = _oracle_grid(256)
    A = rng.normal(size=(13, 13)) + 1j * rng.normal(size=(13, 13))
    return {
        "F sweep (48 points)": lambda k: k.f_sweep_max(re, im)[0],
        "oracle (5000 quadruples)": lambda k: k.mobius_sup_batch(*q, np.pi / 2, log_r, n_iter),
        "Ryser (n=13)": lambda k: k.ryser(A),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(1)
    print(f"{'kernel':<28}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  agree")
    for name, call in cases(rng).items():
        t_nb, out_nb = best_of(lambda: call(nb), args.repeat)
        t_np, out_np = best_of(lambda: call(npk), args.repeat)
        agree = np.allclose(out_nb, out_np, rtol=1e-9, atol=1e-12)
        print(f"{name:<28}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>8.1f}x  {agree}")


if __name__ == "__main__":
    main()
