#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Region geometry for ZicGdof
Exact two-dimensional convex regions: half-plane intersection, vertex
enumeration, containment, equality and linear maximization over Fractions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from src.core.errors import EmptyRegionError, UnboundedRegionError
from src.core.types import GdofPoint, RationalLike, to_fraction

logger = logging.getLogger("ZicGdof.Region")

_Pair = Tuple[Fraction, Fraction]


@dataclass(frozen=True, order=True)
class HalfPlane:
    """a1*d1 + a2*d2 <= b, scaled so the first nonzero coefficient is +1 or -1."""

    a1: Fraction
    a2: Fraction
    b: Fraction

    def __post_init__(self):
        a1, a2, b = to_fraction(self.a1), to_fraction(self.a2), to_fraction(self.b)
        if a1 == 0 and a2 == 0:
            raise ValueError("Half-plane needs a nonzero normal")
        scale = abs(a1) if a1 != 0 else abs(a2)
        object.__setattr__(self, "a1", a1 / scale)
        object.__setattr__(self, "a2", a2 / scale)
        object.__setattr__(self, "b", b / scale)

    @property
    def normal(self) -> _Pair:
        return (self.a1, self.a2)

    def value(self, x: Fraction, y: Fraction) -> Fraction:
        return self.a1 * x + self.a2 * y

    def satisfied_by(self, x: Fraction, y: Fraction) -> bool:
        return self.value(x, y) <= self.b

    def is_tight(self, x: Fraction, y: Fraction) -> bool:
        return self.value(x, y) == self.b

    def __str__(self) -> str:
        return f"{self.a1}*d1 + {self.a2}*d2 <= {self.b}"


NON_NEGATIVE = (HalfPlane(-1, 0, 0), HalfPlane(0, -1, 0))


def box(d1_max: RationalLike, d2_max: RationalLike) -> List[HalfPlane]:
    """Half-planes of [0, d1_max] x [0, d2_max]."""
    return [*NON_NEGATIVE, HalfPlane(1, 0, d1_max), HalfPlane(0, 1, d2_max)]


@dataclass(frozen=True)
class Region2D:
    """Bounded, non-empty convex region.

    Attributes:
        halfplanes: irredundant normalized half-planes, sorted
        vertices: extreme points, counter-clockwise from the lexicographically smallest
    """

    halfplanes: Tuple[HalfPlane, ...]
    vertices: Tuple[GdofPoint, ...]

    @property
    def is_full_dimensional(self) -> bool:
        return len(self.vertices) >= 3

    def contains(self, point: GdofPoint) -> bool:
        return contains(self, point)

    def has_halfplane(self, halfplane: HalfPlane) -> bool:
        return halfplane in self.halfplanes

    def __str__(self) -> str:
        return "Region2D[" + ", ".join(str(v) for v in self.vertices) + "]"


def _cross(o: _Pair, a: _Pair, b: _Pair) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _line_intersection(h: HalfPlane, k: HalfPlane) -> Optional[_Pair]:
    det = h.a1 * k.a2 - h.a2 * k.a1
    if det == 0:
        return None
    x = (h.b * k.a2 - h.a2 * k.b) / det
    y = (h.a1 * k.b - h.b * k.a1) / det
    return (x, y)


def _dedupe(halfplanes: Iterable[HalfPlane]) -> List[HalfPlane]:
    # parallel half-planes with the same orientation: keep the tightest
    tightest = {}
    for h in halfplanes:
        current = tightest.get(h.normal)
        if current is None or h.b < current.b:
            tightest[h.normal] = h
    return list(tightest.values())


def _is_bounded(halfplanes: Sequence[HalfPlane]) -> bool:
    """True when the recession cone {r : a.r <= 0 for all a} is {0}."""
    if not halfplanes:
        return False
    for h in halfplanes:
        for direction in ((-h.a2, h.a1), (h.a2, -h.a1)):
            if all(k.a1 * direction[0] + k.a2 * direction[1] <= 0 for k in halfplanes):
                return False
    return True


def _order_ccw(points: List[_Pair]) -> List[_Pair]:
    start = min(points)
    rest = [p for p in points if p != start]

    def compare(a: _Pair, b: _Pair) -> int:
        turn = _cross(start, a, b)
        if turn > 0:
            return -1
        if turn < 0:
            return 1
        da = (a[0] - start[0]) ** 2 + (a[1] - start[1]) ** 2
        db = (b[0] - start[0]) ** 2 + (b[1] - start[1]) ** 2
        return -1 if da < db else (1 if da > db else 0)

    return [start] + sorted(rest, key=cmp_to_key(compare))


def _drop_collinear(ordered: List[_Pair]) -> List[_Pair]:
    if len(ordered) < 3:
        return ordered
    start, second = ordered[0], ordered[1]
    if all(_cross(start, second, p) == 0 for p in ordered[2:]):
        # a segment: keep both endpoints
        far = max(ordered, key=lambda p: (p[0] - start[0]) ** 2 + (p[1] - start[1]) ** 2)
        return [start, far]
    changed = True
    points = list(ordered)
    while changed and len(points) >= 3:
        changed = False
        for i in range(len(points)):
            prev_pt, pt, next_pt = points[i - 1], points[i], points[(i + 1) % len(points)]
            if _cross(prev_pt, pt, next_pt) == 0:
                del points[i]
                changed = True
                break
    return points


def intersect(halfplanes: Iterable[HalfPlane]) -> Region2D:
    """Intersect half-planes exactly.

    Candidate vertices are the pairwise line intersections that satisfy every
    half-plane. A half-plane is kept when it supports an edge (tight at two
    distinct vertices); for regions with fewer than three vertices every
    half-plane tight at some vertex is kept.

    Args:
        halfplanes: half-planes whose intersection must be bounded

    Returns:
        Region2D

    Raises:
        UnboundedRegionError: the intersection is not bounded
        EmptyRegionError: the intersection is empty
    """
    planes = _dedupe(halfplanes)
    bounded = _is_bounded(planes)
    if not bounded:
        raise UnboundedRegionError(f"Half-plane intersection of {len(planes)} constraints is unbounded")

    candidates = set()
    for h, k in combinations(planes, 2):
        point = _line_intersection(h, k)
        if point is not None and all(p.satisfied_by(*point) for p in planes):
            candidates.add(point)
    if not candidates:
        raise EmptyRegionError(f"Half-plane intersection of {len(planes)} constraints is empty")

    ordered = _drop_collinear(_order_ccw(sorted(candidates)))
    if len(ordered) >= 3:
        kept = [h for h in planes if sum(1 for v in ordered if h.is_tight(*v)) >= 2]
    else:
        kept = [h for h in planes if any(h.is_tight(*v) for v in ordered)]

    logger.debug(f"Intersected {len(planes)} half-planes into {len(ordered)} vertices")
    return Region2D(
        halfplanes=tuple(sorted(kept)),
        vertices=tuple(GdofPoint(x, y) for x, y in ordered),
    )


def contains(region: Region2D, point: GdofPoint) -> bool:
    """Closed-region membership."""
    return all(h.satisfied_by(point.d1, point.d2) for h in region.halfplanes)


def subset(inner: Region2D, outer: Region2D) -> bool:
    """inner is a subset of outer; by convexity it suffices to test the vertices."""
    return all(contains(outer, v) for v in inner.vertices)


def equals(first: Region2D, second: Region2D) -> bool:
    if first.vertices != second.vertices:
        return False
    if first.is_full_dimensional and second.is_full_dimensional:
        return first.halfplanes == second.halfplanes
    return subset(first, second) and subset(second, first)


def maximize(region: Region2D, w1: RationalLike, w2: RationalLike) -> Tuple[Fraction, GdofPoint]:
    """Maximize w1*d1 + w2*d2 over the region.

    Returns:
        (value, vertex); ties go to the lexicographically largest vertex
    """
    w1, w2 = to_fraction(w1), to_fraction(w2)
    best_value, best_vertex = None, None
    for vertex in region.vertices:
        value = w1 * vertex.d1 + w2 * vertex.d2
        if best_value is None or value > best_value or (value == best_value and vertex > best_vertex):
            best_value, best_vertex = value, vertex
    return best_value, best_vertex


def convex_hull(points: Iterable[GdofPoint]) -> Region2D:
    """Region spanned by a finite point set (monotone chain hull)."""
    unique = sorted({p.as_tuple() for p in points})
    if not unique:
        raise EmptyRegionError("Convex hull of no points")

    if len(unique) == 1:
        (x, y), = unique
        return intersect(box_around(x, y, x, y))

    def half(chain_points):
        chain = []
        for pt in chain_points:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], pt) <= 0:
                chain.pop()
            chain.append(pt)
        return chain

    lower = half(unique)
    upper = half(reversed(unique))
    hull = lower[:-1] + upper[:-1]

    if len(hull) == 2:
        (ax, ay), (bx, by) = hull
        nx, ny = ay - by, bx - ax
        dx, dy = bx - ax, by - ay
        planes = [
            HalfPlane(nx, ny, nx * ax + ny * ay),
            HalfPlane(-nx, -ny, -(nx * ax + ny * ay)),
            HalfPlane(dx, dy, dx * bx + dy * by),
            HalfPlane(-dx, -dy, -(dx * ax + dy * ay)),
        ]
        return intersect(planes)

    planes = []
    for i, (ax, ay) in enumerate(hull):
        bx, by = hull[(i + 1) % len(hull)]
        # outward normal of a counter-clockwise edge
        nx, ny = by - ay, ax - bx
        planes.append(HalfPlane(nx, ny, nx * ax + ny * ay))
    return intersect(planes)


def box_around(x_low, y_low, x_high, y_high) -> List[HalfPlane]:
    return [
        HalfPlane(-1, 0, -to_fraction(x_low)),
        HalfPlane(0, -1, -to_fraction(y_low)),
        HalfPlane(1, 0, x_high),
        HalfPlane(0, 1, y_high),
    ]
