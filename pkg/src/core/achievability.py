#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Achievability for ZicGdof
General achievability conditions of the quantize-and-multicast scheme, the
weak/strong power allocations, corner points, and the exact check that the
achievable region meets the delayed-CSIT outer bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.core.errors import A2OutOfRangeError, RegimeError, VerificationFailure
from src.core.gdof import AlphaLike, delayed_region, f, require_canonical
from src.core.region import Region2D, convex_hull, equals
from src.core.types import (
    AntennaConfig,
    Alpha,
    GdofPoint,
    RationalLike,
    positive_part,
    to_fraction,
)

logger = logging.getLogger("ZicGdof.Achievability")

WEAK = "weak"
STRONG = "strong"
CASE_I = "I"
CASE_II = "II"

# labels of the five general conditions, in order
COMMON_RATE = "common_rate"
PRIVATE_1 = "private_1"
COMMON_PLUS_PRIVATE_1 = "common_plus_private_1"
PRIVATE_2 = "private_2"
COMMON_PLUS_PRIVATE_2 = "common_plus_private_2"


@dataclass(frozen=True)
class LinearConstraint:
    """c_d1*d1 + c_d2*d2 + c_eta*d_eta <= rhs"""

    label: str
    c_d1: int
    c_d2: int
    c_eta: int
    rhs: Fraction

    def slack(self, d1: Fraction, d2: Fraction, d_eta: Fraction) -> Fraction:
        return self.rhs - (self.c_d1 * d1 + self.c_d2 * d2 + self.c_eta * d_eta)

    def to_dict(self) -> Dict[str, str]:
        return {
            "label": self.label,
            "c_d1": str(self.c_d1),
            "c_d2": str(self.c_d2),
            "c_eta": str(self.c_eta),
            "rhs": f"{self.rhs.numerator}/{self.rhs.denominator}",
        }


@dataclass(frozen=True)
class AchievabilityConditions:
    cfg: AntennaConfig
    alpha: Alpha
    a2: Fraction
    constraints: Tuple[LinearConstraint, ...]

    def constraint(self, label: str) -> LinearConstraint:
        for c in self.constraints:
            if c.label == label:
                return c
        raise KeyError(label)

    def violations(self, d1: RationalLike, d2: RationalLike, d_eta: RationalLike) -> List[LinearConstraint]:
        d1, d2, d_eta = to_fraction(d1), to_fraction(d2), to_fraction(d_eta)
        return [c for c in self.constraints if c.slack(d1, d2, d_eta) < 0]

    def satisfied_by(self, d1: RationalLike, d2: RationalLike, d_eta: RationalLike) -> bool:
        return not self.violations(d1, d2, d_eta)


@dataclass(frozen=True)
class PowerAllocation:
    """Power back-off a2 at T2 (private power ~ rho^-a2) and quantization-index GDoF d_eta.

    target is the GDoF pair the allocation reaches; d2_threshold is only set
    for strong interference (largest a2 that keeps d2 = N2).
    """

    a2: Fraction
    d_eta: Fraction
    regime: str
    target: GdofPoint
    d2_threshold: Optional[Fraction] = None


@dataclass(frozen=True)
class CornerPointSet:
    case_id: str
    points: Tuple[Tuple[GdofPoint, PowerAllocation], ...] = field(default_factory=tuple)

    @property
    def corners(self) -> List[GdofPoint]:
        return [point for point, _ in self.points]


def quantizer_rate(cfg: AntennaConfig, alpha: AlphaLike, a2: RationalLike) -> Fraction:
    """GDoF of the quantized interference description, min(N2, (alpha-a2)*N1')."""
    a = Alpha.of(alpha).value
    a2 = to_fraction(a2)
    if not 0 <= a2 <= a:
        raise A2OutOfRangeError(a2, Fraction(0), a)
    return min(Fraction(cfg.n2), (a - a2) * cfg.n1_prime)


def conditions(cfg: AntennaConfig, alpha: AlphaLike, a2: RationalLike) -> AchievabilityConditions:
    """The five general achievability conditions on (d1, d2, d_eta).

    Args:
        cfg: canonical antenna configuration
        alpha: interference exponent
        a2: power back-off exponent of T2's private message, >= 0

    Returns:
        AchievabilityConditions
    """
    require_canonical(cfg, "conditions")
    alpha = Alpha.of(alpha)
    a = alpha.value
    a2 = to_fraction(a2)
    if a2 < 0:
        raise A2OutOfRangeError(a2, Fraction(0), None)
    n1p = cfg.n1_prime
    constraints = (
        LinearConstraint(COMMON_RATE, 0, 0, 1, min(a * n1p, Fraction(min(cfg.m2, cfg.n2)))),
        LinearConstraint(PRIVATE_1, 1, 0, 0, Fraction(cfg.m1)),
        LinearConstraint(COMMON_PLUS_PRIVATE_1, 1, 0, 1, f(cfg.n1, (a, cfg.m2), (1, cfg.m1))),
        LinearConstraint(PRIVATE_2, 0, 1, 0, f(cfg.m2, (1 - a2, cfg.n2), (a - a2, cfg.n1))),
        LinearConstraint(COMMON_PLUS_PRIVATE_2, 0, 1, 1, positive_part(a - a2) * n1p + cfg.n2),
    )
    return AchievabilityConditions(cfg, alpha, a2, constraints)


def weak_a2_range(cfg: AntennaConfig, alpha: AlphaLike) -> Tuple[Fraction, Fraction]:
    a = Alpha.of(alpha).value
    return positive_part(a - Fraction(cfg.n2, cfg.n1_prime)), a


def weak_allocation(cfg: AntennaConfig, alpha: AlphaLike, a2: RationalLike) -> Tuple[GdofPoint, PowerAllocation]:
    """Allocation for weak interference (alpha <= 1), d_eta = (alpha - a2) N1'.

    Raises:
        RegimeError: alpha > 1
        A2OutOfRangeError: a2 outside [(alpha - N2/N1')+, alpha]
    """
    require_canonical(cfg, "weak_allocation")
    alpha = Alpha.of(alpha)
    if not alpha.is_weak:
        raise RegimeError(f"weak_allocation needs alpha <= 1, got {alpha}")
    a = alpha.value
    a2 = to_fraction(a2)
    low, high = weak_a2_range(cfg, alpha)
    if not low <= a2 <= high:
        raise A2OutOfRangeError(a2, low, high)

    m1, m2, n1, n2, n1p = cfg.m1, cfg.m2, cfg.n1, cfg.n2, cfg.n1_prime
    d1 = min(Fraction(m1), m1 - a * (m1 + n1p - n1) + n1p * a2)
    d2 = min(Fraction(n2), n2 + a * (m2 - n2) - m2 * a2)
    target = GdofPoint(d1, d2)
    allocation = PowerAllocation(a2=a2, d_eta=(a - a2) * n1p, regime=WEAK, target=target)
    return target, allocation


def a2_d2_threshold(cfg: AntennaConfig, alpha: AlphaLike) -> Fraction:
    """Largest a2 for which the strong allocation still gives d2 = N2."""
    a = Alpha.of(alpha).value
    n1p = cfg.n1_prime
    if a < 1 + Fraction(cfg.n2, n1p):
        return 1 + ((a - 1) * n1p - cfg.n2) / cfg.m2
    return a - Fraction(cfg.n2, n1p)


def strong_allocation(cfg: AntennaConfig, alpha: AlphaLike, a2: RationalLike) -> Tuple[GdofPoint, PowerAllocation]:
    """Allocation for strong interference (alpha > 1).

    Below a2 = alpha - N2/N1' the quantization index saturates at N2 and T2
    keeps d2 = N2; above it d_eta = (alpha - a2) N1'.
    """
    require_canonical(cfg, "strong_allocation")
    alpha = Alpha.of(alpha)
    if not alpha.is_strong:
        raise RegimeError(f"strong_allocation needs alpha > 1, got {alpha}")
    a = alpha.value
    a2 = to_fraction(a2)
    if not 0 <= a2 <= a:
        raise A2OutOfRangeError(a2, Fraction(0), a)

    m1, m2, n1, n2, n1p = cfg.m1, cfg.m2, cfg.n1, cfg.n2, cfg.n1_prime
    if a2 < a - Fraction(n2, n1p):
        d1 = min(Fraction(m1), (a - 1) * n1p + n1 - n2)
        d2 = Fraction(n2)
        d_eta = Fraction(n2)
    else:
        d1 = min(Fraction(m1), n1 - n1p + n1p * a2)
        d2 = min(Fraction(n2), (a - a2) * n1p + positive_part(1 - a2) * (m2 - n1p))
        d_eta = (a - a2) * n1p
    target = GdofPoint(d1, d2)
    allocation = PowerAllocation(
        a2=a2,
        d_eta=d_eta,
        regime=STRONG,
        target=target,
        d2_threshold=a2_d2_threshold(cfg, alpha),
    )
    return target, allocation


def allocate(cfg: AntennaConfig, alpha: AlphaLike, a2: RationalLike) -> Tuple[GdofPoint, PowerAllocation]:
    alpha = Alpha.of(alpha)
    if alpha.is_weak:
        return weak_allocation(cfg, alpha, a2)
    return strong_allocation(cfg, alpha, a2)


def strong_case_threshold(cfg: AntennaConfig) -> Fraction:
    """Smallest alpha > 1 at which the weighted bound stops cutting (M1, N2)."""
    n1p = cfg.n1_prime
    return 1 + Fraction(cfg.n2, n1p) - Fraction(cfg.m2 * (cfg.n1 - cfg.m1), n1p * n1p)


def classify_case(cfg: AntennaConfig, alpha: AlphaLike) -> str:
    """Case I when the weighted bound is inactive at (M1, N2), else Case II.

    Equality in the test is Case I, as is alpha = 0.
    """
    require_canonical(cfg, "classify_case")
    alpha = Alpha.of(alpha)
    if alpha.value == 0:
        return CASE_I
    if alpha.is_weak:
        inactive = Fraction(cfg.n1 - cfg.m1, cfg.n1_prime) >= Fraction(cfg.n2, cfg.m2)
    else:
        inactive = alpha.value >= strong_case_threshold(cfg)
    return CASE_I if inactive else CASE_II


def corner_allocations(cfg: AntennaConfig, alpha: AlphaLike) -> Tuple[str, List[Fraction]]:
    """Case id and the prescribed a2 of each non-trivial corner."""
    alpha = Alpha.of(alpha)
    a = alpha.value
    case_id = classify_case(cfg, alpha)
    m1, m2, n1, n2, n1p = cfg.m1, cfg.m2, cfg.n1, cfg.n2, cfg.n1_prime
    if alpha.is_weak:
        p1 = (1 - Fraction(n2, m2)) * a
        if case_id == CASE_I:
            return case_id, [p1]
        return case_id, [p1, (1 - Fraction(n1 - m1, n1p)) * a]
    p2 = 1 - Fraction(n1 - m1, n1p)
    if case_id == CASE_I:
        return case_id, [p2]
    return case_id, [1 - (n2 - (a - 1) * n1p) / m2, p2]


def corner_points(cfg: AntennaConfig, alpha: AlphaLike) -> CornerPointSet:
    """Non-trivial corner points with the allocations that reach them.

    Case I yields the single corner (M1, N2); Case II yields P1 (on d2 = N2)
    and P2 (on d1 = M1), in that order.
    """
    case_id, a2_values = corner_allocations(cfg, alpha)
    points = tuple(allocate(cfg, alpha, a2) for a2 in a2_values)
    logger.debug(f"{cfg} alpha={Alpha.of(alpha)}: case {case_id}, corners {[str(p) for p, _ in points]}")
    return CornerPointSet(case_id=case_id, points=points)


def closed_form_corners(cfg: AntennaConfig, alpha: AlphaLike) -> List[GdofPoint]:
    """Corner coordinates written directly in terms of the antenna counts."""
    alpha = Alpha.of(alpha)
    a = alpha.value
    case_id = classify_case(cfg, alpha)
    m1, m2, n1, n2, n1p = cfg.m1, cfg.m2, cfg.n1, cfg.n2, cfg.n1_prime
    if case_id == CASE_I:
        return [GdofPoint(min(m1, n1), min(m2, n2))]
    if alpha.is_weak:
        return [
            GdofPoint(m1 - a * (m1 + n1p - n1) + Fraction(n1p, m2) * (m2 - n2) * a, n2),
            GdofPoint(m1, n2 + a * (m2 - n2) - Fraction(m2, n1p) * (n1p - n1 + m1) * a),
        ]
    return [
        GdofPoint(n1 + Fraction(n1p, m2) * ((a - 1) * n1p - n2), n2),
        GdofPoint(m1, (a - 1) * n1p + Fraction(m2, n1p) * (n1 - m1)),
    ]


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _point_record(point: GdofPoint, allocation: PowerAllocation) -> Dict[str, str]:
    return {
        "d1": _fmt(point.d1),
        "d2": _fmt(point.d2),
        "a2": _fmt(allocation.a2),
        "d_eta": _fmt(allocation.d_eta),
    }


def inner_region(cfg: AntennaConfig, alpha: AlphaLike, corners: Optional[CornerPointSet] = None) -> Region2D:
    """Convex hull of the origin, the single-user points and the corner points."""
    corners = corners or corner_points(cfg, alpha)
    points = [
        GdofPoint(0, 0),
        GdofPoint(min(cfg.m1, cfg.n1), 0),
        GdofPoint(0, min(cfg.m2, cfg.n2)),
        *corners.corners,
    ]
    return convex_hull(points)


def verify_inner_equals_outer(cfg: AntennaConfig, alpha: AlphaLike, raise_on_failure: bool = True) -> bool:
    """Check exactly that the scheme's corners span the delayed-CSIT region.

    Every corner must satisfy the general conditions under its allocation,
    with d_eta equal to the quantizer rate, and the hull of the corners plus
    the trivial points must equal delayed_region(cfg, alpha).

    Raises:
        VerificationFailure: a check failed and raise_on_failure is set
    """
    require_canonical(cfg, "verify_inner_equals_outer")
    alpha = Alpha.of(alpha)
    corners = corner_points(cfg, alpha)
    base = {"config": list(cfg.as_tuple()), "alpha": f"{alpha.value.numerator}/{alpha.value.denominator}", "case": corners.case_id}

    def fail(message: str, **details) -> bool:
        record = dict(base, status="fail", **details)
        logger.error(f"Verification failed for {cfg} alpha={alpha}: {message}")
        if raise_on_failure:
            raise VerificationFailure(message, record)
        return False

    for point, allocation in corners.points:
        conds = conditions(cfg, alpha, allocation.a2)
        violated = conds.violations(point.d1, point.d2, allocation.d_eta)
        if violated:
            return fail(
                "corner violates achievability conditions",
                corner=_point_record(point, allocation),
                violated=[c.to_dict() for c in violated],
            )
        rate = quantizer_rate(cfg, alpha, allocation.a2)
        if allocation.d_eta != rate:
            return fail(
                "quantization index GDoF differs from quantizer rate",
                corner=_point_record(point, allocation),
                quantizer_rate=_fmt(rate),
            )

    inner = inner_region(cfg, alpha, corners)
    outer = delayed_region(cfg, alpha)
    if not equals(inner, outer):
        return fail(
            "inner bound differs from outer bound",
            inner=[[_fmt(v.d1), _fmt(v.d2)] for v in inner.vertices],
            outer=[[_fmt(v.d1), _fmt(v.d2)] for v in outer.vertices],
        )
    return True


def best_sum_for_a2(cfg: AntennaConfig, alpha: AlphaLike, a2: RationalLike) -> Fraction:
    """Largest d1 + d2 allowed by the general conditions at a fixed a2.

    d_eta is pinned to the quantizer rate and the single-user limits
    d1 <= min(M1,N1), d2 <= min(M2,N2) apply.
    """
    conds = conditions(cfg, alpha, a2)
    d_eta = quantizer_rate(cfg, alpha, a2)
    if d_eta > conds.constraint(COMMON_RATE).rhs:
        return Fraction(0)
    d1 = min(
        Fraction(min(cfg.m1, cfg.n1)),
        conds.constraint(PRIVATE_1).rhs,
        conds.constraint(COMMON_PLUS_PRIVATE_1).rhs - d_eta,
    )
    d2 = min(
        Fraction(min(cfg.m2, cfg.n2)),
        conds.constraint(PRIVATE_2).rhs,
        conds.constraint(COMMON_PLUS_PRIVATE_2).rhs - d_eta,
    )
    return positive_part(d1) + positive_part(d2)


def grid_search_sum(cfg: AntennaConfig, alpha: AlphaLike, step: RationalLike = Fraction(1, 64)) -> Tuple[Fraction, Fraction]:
    """Brute-force the best sum over a2 in {0, step, ..., alpha}.

    Returns:
        (best sum, a2 attaining it; smallest on ties)
    """
    a = Alpha.of(alpha).value
    step = to_fraction(step)
    best, best_a2 = None, None
    a2 = Fraction(0)
    while a2 <= a:
        total = best_sum_for_a2(cfg, alpha, a2)
        if best is None or total > best:
            best, best_a2 = total, a2
        a2 += step
    return best, best_a2
