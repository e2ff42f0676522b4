# -*- coding: utf-8 -*-
"""Exact half-plane intersection, containment, equality and linear maximization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import EmptyRegionError, UnboundedRegionError
from src.core.gdof import delayed_region, perfect_csit_region
from src.core.region import (
    NON_NEGATIVE,
    HalfPlane,
    box,
    contains,
    convex_hull,
    equals,
    intersect,
    _drop_collinear,
    maximize,
    subset,
)
from src.core.types import AntennaConfig, GdofPoint


def pts(*pairs):
    return [GdofPoint(Fraction(str(x)), Fraction(str(y))) for x, y in pairs]


def test_halfplane_normalization():
    assert HalfPlane(2, 4, 6) == HalfPlane(1, 2, 3)
    assert HalfPlane(0, -3, 0) == HalfPlane(0, -1, 0)
    assert HalfPlane("0.5", "0.5", "1.8").b == Fraction(18, 5)
    with pytest.raises(ValueError):
        HalfPlane(0, 0, 1)


def test_box():
    region = intersect(box(2, 2))
    assert list(region.vertices) == pts((0, 0), (2, 0), (2, 2), (0, 2))


def test_clipped_box():
    region = intersect(box(2, 2) + [HalfPlane(1, 1, 3)])
    assert list(region.vertices) == pts((0, 0), (2, 0), (2, 1), (1, 2), (0, 2))
    assert len(region.halfplanes) == 5


def test_redundant_and_duplicate_halfplanes_are_dropped():
    region = intersect(box(2, 2) + [HalfPlane(1, 1, 10), HalfPlane(2, 0, 8), HalfPlane(1, 0, 2)])
    assert region.halfplanes == intersect(box(2, 2)).halfplanes


def test_unbounded_intersection():
    with pytest.raises(UnboundedRegionError):
        intersect([*NON_NEGATIVE, HalfPlane(1, 0, 1)])


def test_empty_intersection():
    with pytest.raises(EmptyRegionError):
        intersect(box(1, 1) + [HalfPlane(-1, -1, -5)])


def test_degenerate_regions():
    segment = intersect(box(2, 0))
    assert list(segment.vertices) == pts((0, 0), (2, 0))
    assert not segment.is_full_dimensional
    point = intersect(box(0, 0))
    assert list(point.vertices) == pts((0, 0))


def test_contains_is_boundary_inclusive():
    square = intersect(box(2, 2))
    assert contains(square, GdofPoint(2, 2))
    assert square.contains(GdofPoint(1, 1))
    assert not contains(square, GdofPoint("2.01", 1))


def test_weak_interference_regions_are_nested(cfg_2232):
    assert subset(delayed_region(cfg_2232, "0.8"), delayed_region(cfg_2232, "0.4"))
    assert not subset(delayed_region(cfg_2232, "0.4"), delayed_region(cfg_2232, "0.8"))


def test_delayed_equals_perfect_when_m2_at_most_n1(cfg_2232):
    assert equals(delayed_region(cfg_2232, "1.4"), perfect_csit_region(cfg_2232, "1.4"))


def test_maximize_examples(cfg_1211, cfg_2232):
    assert maximize(intersect(box(2, 2)), 1, 1) == (4, GdofPoint(2, 2))
    assert maximize(delayed_region(cfg_1211, "0.4"), 1, 1) == (Fraction("1.8"), GdofPoint("0.8", 1))
    # the weighted edge from (9/5, 2) to (2, 9/5) is parallel to the sum direction
    region = delayed_region(cfg_2232, "1.4")
    assert maximize(region, 1, 1) == (Fraction("3.8"), GdofPoint(2, "1.8"))
    assert GdofPoint("1.8", 2) in region.vertices


def test_maximize_breaks_ties_towards_the_largest_vertex():
    region = intersect(box(2, 2) + [HalfPlane(1, 1, 3)])
    assert maximize(region, 1, 1) == (3, GdofPoint(2, 1))


def test_convex_hull_of_points():
    hull = convex_hull(pts((0, 0), (1, 0), (1, "0.6"), ("0.8", 1), (0, 1), ("0.5", "0.5")))
    assert equals(hull, delayed_region(AntennaConfig(1, 2, 1, 1), "0.4"))


def test_convex_hull_degenerate_inputs():
    assert list(convex_hull(pts((1, 1))).vertices) == pts((1, 1))
    segment = convex_hull(pts((0, 0), (1, 1), (2, 2)))
    assert list(segment.vertices) == pts((0, 0), (2, 2))


positive = st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=8)
cut_weight = st.fractions(min_value=0, max_value=4, max_denominator=6)


@st.composite
def clipped_boxes(draw):
    """Boxes [0,a]x[0,b] with up to two extra cuts that keep the origin interior"""
    planes = box(draw(positive), draw(positive))
    for _ in range(draw(st.integers(min_value=0, max_value=2))):
        w1, w2 = draw(cut_weight), draw(cut_weight)
        if w1 == 0 and w2 == 0:
            continue
        planes.append(HalfPlane(w1, w2, draw(positive)))
    return planes


@settings(max_examples=60, deadline=None)
@given(planes=clipped_boxes())
def test_vertices_are_feasible_and_supported(planes):
    region = intersect(planes)
    assert region.is_full_dimensional
    for vertex in region.vertices:
        assert all(h.satisfied_by(vertex.d1, vertex.d2) for h in planes)
        assert sum(1 for h in region.halfplanes if h.is_tight(vertex.d1, vertex.d2)) >= 2
    for h in region.halfplanes:
        assert sum(1 for v in region.vertices if h.is_tight(v.d1, v.d2)) == 2


@settings(max_examples=60, deadline=None)
@given(planes=clipped_boxes())
def test_hull_of_vertices_recovers_the_region(planes):
    region = intersect(planes)
    assert equals(convex_hull(region.vertices), region)


@settings(max_examples=60, deadline=None)
@given(planes=clipped_boxes(), w1=cut_weight, w2=cut_weight)
def test_maximize_dominates_every_vertex(planes, w1, w2):
    region = intersect(planes)
    value, vertex = maximize(region, w1, w2)
    assert vertex in region.vertices
    assert all(w1 * v.d1 + w2 * v.d2 <= value for v in region.vertices)


@settings(max_examples=60, deadline=None)
@given(planes=clipped_boxes(), extra=clipped_boxes())
def test_adding_constraints_shrinks_the_region(planes, extra):
    outer = intersect(planes)
    inner = intersect(planes + extra)
    assert subset(inner, outer)


def test_collinear_points_keep_both_segment_ends():
    line = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(2), Fraction(0))]
    assert _drop_collinear(line) == [line[0], line[2]]
    diagonal = [(Fraction(k, 2), Fraction(k, 2)) for k in range(5)]
    assert _drop_collinear(diagonal) == [diagonal[0], diagonal[-1]]


def test_collinear_points_inside_a_polygon_are_dropped():
    square = [(Fraction(x), Fraction(y)) for x, y in ((0, 0), (1, 0), (2, 0), (2, 2), (0, 2))]
    assert _drop_collinear(square) == [square[0], square[2], square[3], square[4]]
