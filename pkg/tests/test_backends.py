import os
import subprocess
import sys

import numpy as np
import pytest

from zerofree import _kernels_numba as nb
from zerofree import _kernels_numpy as npk
from zerofree.criteria import _oracle_grid


def disk_points(rng, m):
    return 1 + 0.45 * np.sqrt(rng.uniform(0, 1, m)) * np.exp(2j * np.pi * rng.uniform(0, 1, m))


@pytest.mark.parametrize("m", [1, 2, 5, 17])
def test_f_sweep_identical(rng, m):
    z = disk_points(rng, m)
    z[-1] += 0.8j  # make some sets refuted
    args = (np.ascontiguousarray(z.real), np.ascontiguousarray(z.imag))
    assert tuple(nb.f_sweep_max(*args)) == tuple(npk.f_sweep_max(*args))


def test_mu_many_agree(rng):
    z = disk_points(rng, 9)
    a = disk_points(rng, 40)
    v1, i1 = nb.mu_many(a.real.copy(), a.imag.copy(), z.real.copy(), z.imag.copy())
    v2, i2 = npk.mu_many(a.real.copy(), a.imag.copy(), z.real.copy(), z.imag.copy())
    assert np.allclose(v1, v2, rtol=0, atol=1e-13)


def test_oracle_agree(rng):
    q = 1 + 0.5 * (rng.normal(size=(4, 500)) + 1j * rng.normal(size=(4, 500)))
    log_r, n_iter = _oracle_grid(256)
    for theta in (0.7, np.pi / 2, 1.9):
        s1 = nb.mobius_sup_batch(*q, theta, log_r, n_iter)
        s2 = npk.mobius_sup_batch(*q, theta, log_r, n_iter)
        assert np.array_equal(np.isinf(s1), np.isinf(s2))
        fin = np.isfinite(s1)
        assert fin.sum() > 100
        assert np.allclose(s1[fin], s2[fin], rtol=0, atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_ryser_agree(rng, n):
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    assert nb.ryser(A) == pytest.approx(npk.ryser(A), rel=1e-12)


def test_env_flag_selects_numpy():
    env = dict(os.environ, ZF_NUMBA="0")
    code = "import zerofree; print(zerofree.BACKEND, zerofree.certify_a2([1, 1j]).worst_value)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "1.0"]
