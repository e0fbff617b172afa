"""Certificates of nonvanishing permanents on convex planar sets."""
from ._backend import BACKEND
from .criteria import (AngleParams, CertificationReport, certify_a2, certify_b2, certify_oracle, f_criterion,
                       g_criteria, mobius_arg_sup, pair_prefilter, two_point_theta)
from .geom import (Cone, ConvexPolygon, DegenerateRegionError, Disk, DomainError, Interval, Points, Rectangle,
                   Trapezoid, boundary_discretize, convex_hull, to_polygon)
from .maximality import GrowthTrace, MaximalityProfile, boundary_scan, grow, mu, push_out_step
from .permanent import SampleStats, permanent_exact, sample_and_verify
from .regions import (BoundResult, builtin_region, icecream_tstar, necessary_box, rectangle_max_halfheight,
                      trapezoid_max_long_side, two_point_region_contains)

__all__ = [
    "BACKEND", "AngleParams", "CertificationReport", "certify_a2", "certify_b2", "certify_oracle", "f_criterion",
    "g_criteria", "mobius_arg_sup", "pair_prefilter", "two_point_theta", "Cone", "ConvexPolygon",
    "DegenerateRegionError", "Disk", "DomainError", "Interval", "Points", "Rectangle", "Trapezoid",
    "boundary_discretize", "convex_hull", "to_polygon", "GrowthTrace", "MaximalityProfile", "boundary_scan", "grow",
    "mu", "push_out_step", "SampleStats", "permanent_exact", "sample_and_verify", "BoundResult", "builtin_region",
    "icecream_tstar", "necessary_box", "rectangle_max_halfheight", "trapezoid_max_long_side",
    "two_point_region_contains",
]
