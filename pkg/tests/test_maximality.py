import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerofree.criteria import certify_a2, f_criterion, g_criteria
from zerofree.geom import ConvexPolygon, DegenerateRegionError, Disk, DomainError, Points, boundary_discretize, convex_hull
from zerofree.maximality import (MaximalityProfile, UncertifiedRegionError, boundary_scan, disk_H, g_slack, grow,
                                 mu, mu_many, mu_witness, push_out_step)
from zerofree.regions import builtin_region

SQ2 = math.sqrt(2.0)
QUAD = builtin_region("example-quadrilateral")
DISK_PTS = boundary_discretize(Disk(1, 0.5), 128)


def random_certified_polygon(rng, k=6):
    """Hull of k points from a small disk around 1, which is always certified."""
    pts = 1 + 0.45 * np.sqrt(rng.uniform(0, 1, k)) * np.exp(2j * np.pi * rng.uniform(0, 1, k))
    return convex_hull(list(pts))


def convex_combo(rng, verts):
    w = rng.dirichlet(np.ones(len(verts)))
    return complex(w @ np.asarray(verts))


class TestMu:
    def test_examples(self):
        assert mu([1], 1) == -4.0
        m, quad = mu_witness(DISK_PTS, 0.5)
        assert abs(m) <= 1e-12
        assert f_criterion(*quad) == pytest.approx(m, abs=1e-15)
        assert f_criterion(0.5, 1 + 0.5j, 1 - 0.5j, 0.5) == pytest.approx(0.0, abs=1e-15)

    def test_quadrilateral_apex(self):
        apex = 1.5 + SQ2
        # the apex is binding for B2 but strictly inside the A2 frontier
        assert abs(g_slack(QUAD, [apex])[0]) <= 1e-9
        assert mu(QUAD, apex) < -0.5

    def test_vertex_attainment(self, rng):
        for _ in range(10):
            poly = random_certified_polygon(rng)
            verts = poly.vertices
            for _ in range(100):
                a, b, c, d = (convex_combo(rng, verts) for _ in range(4))
                assert f_criterion(a, b, c, d) <= mu(poly, a) + 1e-9

    def test_vertices_certified(self, rng):
        for _ in range(10):
            poly = random_certified_polygon(rng)
            assert np.all(mu_many(poly, poly.vertices)[0] <= 1e-9)

    def test_refuted_has_positive_vertex(self):
        pts = [1, 1 + 1.2j, 1 - 1.2j, 2]
        assert not certify_a2(pts).certified
        assert mu_many(pts, pts)[0].max() > 0

    def test_empty(self):
        with pytest.raises(DegenerateRegionError):
            mu([], 1)


class TestBoundaryScan:
    def test_disk_has_three_maximal_points(self):
        prof = boundary_scan(Disk(1, 0.5), n=256)
        got = sorted(prof.maximal_points(), key=lambda z: (z.real, z.imag))
        assert np.allclose(got, [0.5, 1 - 0.5j, 1 + 0.5j], atol=1e-12)
        assert prof.labels.count("pushable") == 253

    def test_single_point(self):
        prof = boundary_scan(Points((1.0,)))
        assert prof.labels == ["pushable"]

    def test_quadrilateral_apex_under_g(self):
        prof = boundary_scan(QUAD, n=64)
        assert any(abs(p - (1.5 + SQ2)) < 1e-12 for p in prof.maximal_points(use_g=True))

    def test_uncertified(self):
        with pytest.raises(UncertifiedRegionError):
            boundary_scan(ConvexPolygon((1, 3, 1 + 2j)), n=16)

    def test_json(self):
        js = boundary_scan(Disk(1, 0.5), n=16).to_json()
        assert len(js["points"]) == len(js["mu"]) == len(js["labels"]) == 16
        assert isinstance(MaximalityProfile([1], np.array([0.0]), np.array([0.0]), 1e-9).labels, list)


class TestPushOut:
    def test_segment_push_matches_certify_bisection(self):
        seg = convex_hull([1, 2])
        site = 0 if seg.outward_normal(0).imag > 0 else 1
        new, d = push_out_step(seg, site, direction=1j)
        assert d > 0
        lo, hi = 0.0, 10.0
        while hi - lo > 1e-12:
            mid = 0.5 * (lo + hi)
            ok = certify_a2([1, 2, 1.5 + 1j * mid]).certified
            lo, hi = (mid, hi) if ok else (lo, mid)
        assert d == pytest.approx(lo, abs=1e-8)
        assert certify_a2(new.vertices).certified

    def test_apex_is_optimal_for_b2(self):
        k = QUAD.vertices.index(1.5 + SQ2)
        _, d = push_out_step(QUAD, k, direction=1, kind="vertex", criterion="b2")
        assert d <= 1e-6

    def test_inward_rejected(self):
        with pytest.raises(DomainError):
            push_out_step(QUAD, 0, direction=-QUAD.outward_normal(0))

    def test_bad_options(self):
        with pytest.raises(DomainError):
            push_out_step(QUAD, 0, criterion="x")
        with pytest.raises(DomainError):
            push_out_step(QUAD, 0, kind="edge")
        with pytest.raises(DegenerateRegionError):
            push_out_step(ConvexPolygon((1,)), 0)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10_000), st.integers(0, 5))
    def test_push_keeps_certificate_and_contains_old(self, seed, site):
        poly = random_certified_polygon(np.random.default_rng(seed))
        new, d = push_out_step(poly, site % poly.n_sides())
        assert d >= 0
        assert certify_a2(new.vertices).certified
        assert all(new.contains(v, 1e-9) for v in poly.vertices)


class TestGrow:
    def test_zero_steps(self):
        seg = convex_hull([1 - 0.25j, 1 + 0.25j])
        trace = grow(seg, 0)
        assert trace.polygons == [seg] and trace.steps == []

    def test_short_run_invariants(self):
        trace = grow(convex_hull([1 - 0.25j, 1 + 0.25j]), 12)
        for prev, nxt in zip(trace.polygons, trace.polygons[1:]):
            assert prev.vertices != nxt.vertices
            assert all(nxt.contains(v, 1e-9) for v in prev.vertices)
            assert nxt.area() >= prev.area() - 1e-12
            assert certify_a2(nxt.vertices).certified
        js = trace.to_json()
        assert len(js["polygons"]) == len(trace.polygons)
        assert set(js["steps"][0]) == {"site", "d", "worstF", "mu"}

    def test_max_slack_deterministic(self):
        seed = convex_hull([1, 1.2 + 0.2j, 1.2 - 0.2j])
        a = grow(seed, 6, schedule="max-slack")
        b = grow(seed, 6, schedule="max-slack")
        assert a.to_json() == b.to_json()

    def test_errors(self):
        with pytest.raises(UncertifiedRegionError):
            grow(ConvexPolygon((1, 3, 1 + 2j)), 3)
        with pytest.raises(DegenerateRegionError):
            grow(ConvexPolygon((1,)), 3)
        with pytest.raises(DomainError):
            grow(QUAD, 3, schedule="random")


class TestDiskH:
    def test_examples(self):
        assert disk_H(-0.75 * math.pi, 0.75 * math.pi) == pytest.approx(0.0, abs=1e-15)
        assert disk_H(0, 0) == pytest.approx(-(SQ2 + 1) ** 2)

    @given(st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi))
    def test_symmetric(self, u, v):
        assert disk_H(u, v) == pytest.approx(disk_H(v, u), abs=1e-12)

    def test_equals_g1(self, rng):
        for u, v in rng.uniform(-math.pi, math.pi, (1000, 2)):
            a = 1 + 0.5 * np.exp(1j * (u - math.pi / 4))
            b = 1 + 0.5 * np.exp(1j * (v - math.pi / 4))
            assert disk_H(u, v) == pytest.approx(g_criteria(a, b)[0], abs=1e-12)
