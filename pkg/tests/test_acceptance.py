"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are also collected and repeated in the terminal summary.
"""
import math
import time

import numpy as np

from conftest import record
from zerofree import reproduce
from zerofree.criteria import RIGHT, certify_a2, certify_b2, f_criterion, g_criteria, mobius_arg_sup_batch
from zerofree.geom import Disk, Points, boundary_discretize, convex_hull
from zerofree.maximality import grow, mu_witness
from zerofree.permanent import sample_and_verify
from zerofree.regions import (INTERVAL_MAX_RATIO, TRAPEZOID_T_MAX, builtin_region, icecream_tstar,
                              rectangle_max_halfheight, trapezoid_max_long_side)

TOL = 1e-9
SQ2 = math.sqrt(2.0)


def check(number, name, passed, detail):
    passed = bool(passed)
    record(number, name, passed, detail)
    print(f"{'PASS' if passed else 'FAIL'} [{number}] {name}: {detail}")
    assert passed, detail


def test_1_quadrilateral():
    t0 = time.perf_counter()
    quad = [0.5, 1 - 0.5j, 1.5 + SQ2, 1 + 0.5j]
    f = certify_a2(quad, TOL)
    g = certify_b2(quad, TOL)
    bumped = certify_b2([0.5, 1 - 0.5j, 1.5 + SQ2 + 1e-3, 1 + 0.5j], TOL)
    dt = time.perf_counter() - t0
    check(1, "quadrilateral certified (F, G); bumped apex refuted (G)",
          f.certified and g.certified and not bumped.certified and dt < 0.1,
          f"maxF={f.worst_value:.2e} maxG={g.worst_value:.2e} bumpedG={bumped.worst_value:.2e} t={dt * 1e3:.1f}ms")


def test_2_icecream():
    t0 = time.perf_counter()
    t = icecream_tstar(1e-8)
    disk = boundary_discretize(Disk(1, 0.5), 128)
    below = certify_b2(disk + [1 + t - 1e-6], TOL)
    above = certify_b2(disk + [1 + t + 1e-2], TOL)
    dt = time.perf_counter() - t0
    check(2, "ice-cream optimum", 1.63 <= t <= 1.65 and below.certified and not above.certified and dt < 1.0,
          f"t*={t:.10f} below={below.verdict} above={above.verdict} t={dt:.3f}s")


def test_3_interval():
    lo, hi = 1.0, 10.0
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if certify_b2([1, mid], TOL).certified else (lo, mid)
    err = abs(lo - (3 + 2 * SQ2))
    check(3, "interval ratio", err <= 1e-6, f"r={lo:.12f} err={err:.2e}")


def test_4_two_point_region():
    t0 = time.perf_counter()
    stats = reproduce.two_point_grid(200, band=1e-4)
    dt = time.perf_counter() - t0
    check(4, "two-point region vs oracle", stats["disagree"] == 0 and dt < 30,
          f"{stats['disagree']} disagreements outside band ({stats['band']} band points) t={dt:.1f}s")


def test_5_disk_maximality():
    H, U, V = reproduce.h_grid_max(512)
    hmax = float(H.max())
    near = H >= hmax - 1e-9
    targets = np.array([[-0.75 * np.pi, 0.75 * np.pi], [0.75 * np.pi, -0.75 * np.pi]])
    at = np.stack([U[near], V[near]], axis=1)
    dist = np.min(np.linalg.norm(at[:, None, :] - targets[None], axis=2), axis=1)
    disk = boundary_discretize(Disk(1, 0.5), 128)
    m, quad = mu_witness(disk, 0.5)
    stated = (0.5, 1 + 0.5j, 1 - 0.5j, 0.5)
    # conjugation maps the disk to itself, so the mirrored quadruple is an equal maximiser
    witness_ok = np.allclose(quad, stated, atol=1e-12) or np.allclose(np.conj(quad), stated, atol=1e-12)
    check(5, "disk maximality",
          abs(hmax) <= 1e-9 and dist.max() <= 1e-2 and abs(m) <= 1e-9 and witness_ok
          and abs(f_criterion(*stated)) <= 1e-9,
          f"maxH={hmax:.1e} argmax dist={dist.max():.1e} mu={m:.1e} witness={tuple(complex(round(z.real, 12), round(z.imag, 12)) for z in quad)}")


def test_6_rectangle_trapezoid():
    rng = np.random.default_rng(6)
    worst, failures = -math.inf, 0
    for _ in range(50):
        M, L = rng.uniform(0.05, 5), rng.uniform(0.05, 20)
        N = rectangle_max_halfheight(M, L).value
        grid = np.linspace(M, M + L, 8)[:, None] + 1j * np.linspace(-N, N, 8)[None, :]
        rep = certify_a2(grid.ravel(), TOL)
        worst, failures = max(worst, rep.worst_value), failures + (not rep.certified)
    for _ in range(50):
        M, t = rng.uniform(0.05, 5), rng.uniform(1e-3, TRAPEZOID_T_MAX - 1e-3)
        L = trapezoid_max_long_side(M, t).value
        grid = np.linspace(M, L, 8)[:, None] * (1 + 1j * t * np.linspace(-1, 1, 8)[None, :])
        rep = certify_a2(grid.ravel(), TOL)
        worst, failures = max(worst, rep.worst_value), failures + (not rep.certified)
    check(6, "rectangle/trapezoid bounds sufficient", failures == 0, f"{failures}/100 failed, worst F={worst:.2e}")


def test_7_permanent_nonvanishing():
    t0 = time.perf_counter()
    zeros = {}
    for name in ("barvinok-disk", "example-quadrilateral", "interval"):
        zeros[name] = sample_and_verify(builtin_region(name), (2, 8), 1000, seed=0).zeros_found
    control = sample_and_verify(Points((1.0, -1.0)), (2, 8), 1000, seed=0).zeros_found
    dt = time.perf_counter() - t0
    check(7, "permanent nonvanishing", all(v == 0 for v in zeros.values()) and control > 0 and dt < 60,
          f"zeros={zeros} control zeros={control} t={dt:.1f}s")


def test_8_grower():
    t0 = time.perf_counter()
    seed = convex_hull([1, 1 + 0.25j, 1 - 0.25j])
    trace = grow(seed, 100)
    dt = time.perf_counter() - t0
    polys = trace.polygons
    nested = all(p.vertices != q.vertices and all(q.contains(v, 1e-9) for v in p.vertices)
                 for p, q in zip(polys, polys[1:]))
    certified = all(certify_a2(p.vertices, TOL).certified for p in polys)
    areas = [p.area() for p in polys]
    monotone = all(b >= a - 1e-12 for a, b in zip(areas, areas[1:]))
    flagged = [s for s in trace.steps if s.site_mu >= -TOL]
    small = all(s.distance < 1e-4 for s in flagged)
    # with tol = 1e-9 few sites are ever flagged, so also require it of near-maximal sites
    near = [s for s in trace.steps if s.site_mu >= -1e-2]
    near_small = bool(near) and all(s.distance < 1e-4 for s in near)
    check(8, "grower invariants", nested and certified and monotone and small and near_small and dt < 120,
          f"{len(polys)} polygons, {len(trace.steps)} pushes, {len(flagged)} at maximal sites, "
          f"{len(near)} near-maximal (max d={max(s.distance for s in near) if near else 0:.1e}), "
          f"area {areas[0]:.3g}->{areas[-1]:.4g} t={dt:.1f}s")


def test_9_property_suite():
    rng = np.random.default_rng(9)

    def cplx(*shape):
        return rng.normal(size=shape) + 1j * rng.normal(size=shape)

    a, b, c, d = cplx(4, 10000)

    def F(a, b, c, d):
        return np.array([f_criterion(*q) for q in zip(a, b, c, d)])

    base = F(a, b, c, d)
    scale = np.max(np.abs([a, b, c, d]), axis=0) ** 4
    sym = max(np.max(np.abs(F(*q) - base) / np.maximum(scale, 1)) for q in ((b, a, d, c), (c, d, a, b), (d, c, b, a)))
    lam = cplx(10000)
    scal = np.max(np.abs(F(lam * a, lam * b, lam * c, lam * d) - np.abs(lam) ** 4 * base)
                  / np.maximum(scale * np.abs(lam) ** 4, 1))
    r = rng.uniform(0.01, 10, 10000)
    g = np.array([g_criteria(x, y) for x, y in zip(a, b)])
    gr = np.array([g_criteria(k * x, k * y) for k, x, y in zip(r, a, b)])
    gscale = np.max(np.abs(gr - r[:, None] ** 2 * g) / np.maximum((r * np.maximum(np.abs(a), np.abs(b)))[:, None] ** 2, 1))

    # F-sign versus oracle: quadruples from the sector |arg| < pi/4, then the whole right half-plane
    disagreements = {}
    for label, half in (("sector", math.pi / 4), ("half-plane", math.pi / 2)):
        z = np.exp(rng.uniform(math.log(0.2), math.log(5), (4, 10000))) * np.exp(1j * rng.uniform(-half, half, (4, 10000)))
        f = F(*z)
        sup = mobius_arg_sup_batch(*z, theta=RIGHT)
        pred = f <= 0
        if label == "half-plane":
            # a lone quadruple also needs the pair conditions that a full set would supply
            p, q, s, t = z
            pred &= ((p * s.conj()).real >= 0) & ((q * t.conj()).real >= 0) & ((t * s.conj()).real >= 0)
        band = (np.abs(f) / np.max(np.abs(z), axis=0) ** 4 <= 1e-6) | (np.abs(sup - RIGHT) <= 1e-6)
        disagreements[label] = int(np.sum((pred != (sup <= RIGHT + 1e-6)) & ~band))
    ok = sym <= 1e-12 and scal <= 1e-10 and gscale <= 1e-10 and not any(disagreements.values())
    check(9, "criterion symmetry/scale/oracle suite", ok,
          f"sym={sym:.1e} scale={scal:.1e} Gscale={gscale:.1e} oracle disagreements={disagreements}")


def test_reproduce_pipelines_pass():
    for example in reproduce.EXAMPLES:
        assert all(c.passed for c in reproduce.run(example)), example
