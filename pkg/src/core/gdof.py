#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
GDoF machinery for ZicGdof
The f() pre-log function, the delayed-CSIT GDoF region of the MIMO Z
interference channel, its sum-GDoF, and the perfect-CSIT, DoF and TIN
baselines it is compared against.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Tuple, Union

from src.core.errors import NonCanonicalConfigError
from src.core.region import NON_NEGATIVE, HalfPlane, Region2D, intersect
from src.core.types import (
    AntennaConfig,
    Alpha,
    FTermSpec,
    RationalLike,
    positive_part,
    to_fraction,
)

logger = logging.getLogger("ZicGdof.Gdof")

AlphaLike = Union[Alpha, RationalLike]


def f_term(spec: FTermSpec) -> Fraction:
    """Pre-log of log|I_u + rho^a1 H1 H1^H + rho^a2 H2 H2^H|.

    The stronger component takes min(u, u_i1) dimensions first and the weaker
    one fills what is left of the u receive dimensions. On equal exponents
    index 1 goes first.

    Args:
        spec: FTermSpec

    Returns:
        Fraction: min(u,u_i1)*a_i1+ + min((u-u_i1)+, u_i2)*a_i2+
    """
    if spec.a1 >= spec.a2:
        (a_first, u_first), (a_second, u_second) = (spec.a1, spec.u1), (spec.a2, spec.u2)
    else:
        (a_first, u_first), (a_second, u_second) = (spec.a2, spec.u2), (spec.a1, spec.u1)
    first_dims = min(spec.u, u_first)
    second_dims = min(max(spec.u - u_first, 0), u_second)
    return first_dims * positive_part(a_first) + second_dims * positive_part(a_second)


def f(u: int, first: Tuple[RationalLike, int], second: Tuple[RationalLike, int]) -> Fraction:
    """Shorthand for f_term(FTermSpec(u, a1, u1, a2, u2))."""
    return f_term(FTermSpec(u, to_fraction(first[0]), first[1], to_fraction(second[0]), second[1]))


def canonicalize(cfg: AntennaConfig) -> AntennaConfig:
    """Switch off T2 antennas beyond N1+N2.

    Only M2 is reduced; whether the result is canonical is reported by
    AntennaConfig.is_canonical and the other counts are never rewritten.
    """
    capped = min(cfg.m2, cfg.n1 + cfg.n2)
    if capped == cfg.m2:
        return cfg
    logger.debug(f"Capping M2 of {cfg} at N1+N2={capped}")
    return AntennaConfig(cfg.m1, capped, cfg.n1, cfg.n2)


def require_canonical(cfg: AntennaConfig, operation: str) -> None:
    if not cfg.is_canonical:
        raise NonCanonicalConfigError(cfg, operation)


def weighted_bound(cfg: AntennaConfig, alpha: AlphaLike) -> HalfPlane:
    """The delayed-CSIT bound d1/q + d2/p <= f(N1,(a,M2),(1,M1))/q + f(M2,(a,N1),(1,N2))/p - a."""
    a = Alpha.of(alpha).value
    q, p = cfg.q, cfg.p
    rhs = (
        f(cfg.n1, (a, cfg.m2), (1, cfg.m1)) / q
        + f(cfg.m2, (a, cfg.n1), (1, cfg.n2)) / p
        - a
    )
    return HalfPlane(Fraction(1, q), Fraction(1, p), rhs)


def delayed_region(cfg: AntennaConfig, alpha: AlphaLike) -> Region2D:
    """GDoF region with delayed CSIT. Valid for any antenna counts."""
    planes = [
        *NON_NEGATIVE,
        HalfPlane(1, 0, min(cfg.m1, cfg.n1)),
        HalfPlane(0, 1, min(cfg.m2, cfg.n2)),
        weighted_bound(cfg, alpha),
    ]
    return intersect(planes)


def perfect_sum_bound(cfg: AntennaConfig, alpha: AlphaLike) -> Fraction:
    a = Alpha.of(alpha).value
    n1p = cfg.n1_prime
    return f(cfg.n1, (a, cfg.m2), (1, cfg.m1)) + f(cfg.n2, (1 - a, n1p), (1, cfg.m2 - n1p))


def perfect_csit_region(cfg: AntennaConfig, alpha: AlphaLike) -> Region2D:
    require_canonical(cfg, "perfect_csit_region")
    planes = [
        *NON_NEGATIVE,
        HalfPlane(1, 0, cfg.m1),
        HalfPlane(0, 1, cfg.n2),
        HalfPlane(1, 1, perfect_sum_bound(cfg, alpha)),
    ]
    return intersect(planes)


def dof_region_delayed(cfg: AntennaConfig) -> Region2D:
    """DoF region (alpha = 1) with delayed CSIT."""
    require_canonical(cfg, "dof_region_delayed")
    n1p = cfg.n1_prime
    planes = [
        *NON_NEGATIVE,
        HalfPlane(1, 0, cfg.m1),
        HalfPlane(0, 1, cfg.n2),
        HalfPlane(1, 1, max(cfg.m2, cfg.n1)),
        HalfPlane(Fraction(1, n1p), Fraction(1, cfg.m2), Fraction(cfg.n1, n1p)),
    ]
    return intersect(planes)


def tin_region(cfg: AntennaConfig, alpha: AlphaLike) -> Region2D:
    """Region reached by treating interference as noise at R1, both transmitters at full power."""
    a = Alpha.of(alpha).value
    d1_max = f(cfg.n1, (1, cfg.m1), (a, cfg.m2)) - a * min(cfg.n1, cfg.m2)
    planes = [
        *NON_NEGATIVE,
        HalfPlane(1, 0, d1_max),
        HalfPlane(0, 1, min(cfg.m2, cfg.n2)),
    ]
    return intersect(planes)


def sum_gdof_weak(cfg: AntennaConfig, alpha: AlphaLike) -> Fraction:
    a = Alpha.of(alpha).value
    m1, m2, n1, n2, n1p = cfg.m1, cfg.m2, cfg.n1, cfg.n2, cfg.n1_prime
    full = Fraction(m1 + n2)
    return min(full, full - a * (m1 - n1 + Fraction(n2 * n1p, m2)))


def sum_gdof_strong(cfg: AntennaConfig, alpha: AlphaLike) -> Fraction:
    a = Alpha.of(alpha).value
    m1, m2, n1, n2, n1p = cfg.m1, cfg.m2, cfg.n1, cfg.n2, cfg.n1_prime
    return min(
        Fraction(m1 + n2),
        n2 + n1 - Fraction((n2 + n1p) * n1p, m2) + Fraction(n1p * n1p, m2) * a,
    )


def sum_gdof_closed_form(cfg: AntennaConfig, alpha: AlphaLike) -> Fraction:
    """Sum-GDoF with delayed CSIT.

    Args:
        cfg: canonical antenna configuration
        alpha: interference exponent

    Returns:
        Fraction
    """
    require_canonical(cfg, "sum_gdof_closed_form")
    alpha = Alpha.of(alpha)
    if alpha.is_weak:
        return sum_gdof_weak(cfg, alpha)
    return sum_gdof_strong(cfg, alpha)


def perfect_sum_gdof(cfg: AntennaConfig, alpha: AlphaLike) -> Fraction:
    """Sum-GDoF with perfect CSIT.

    When M2 <= N1 the perfect and delayed regions coincide and the delayed
    closed form is returned.
    """
    require_canonical(cfg, "perfect_sum_gdof")
    alpha = Alpha.of(alpha)
    a = alpha.value
    m1, m2, n1, n2 = cfg.m1, cfg.m2, cfg.n1, cfg.n2
    if m2 <= n1:
        return sum_gdof_closed_form(cfg, alpha)
    if alpha.is_weak:
        if m1 + n2 <= m2:
            return Fraction(m1 + n2)
        return m1 * (1 - a) + m2 * a + n2 * (1 - a)
    if a >= 1 + Fraction(n2, n1) - Fraction(m2 - m1, n1):
        return Fraction(m1 + n2)
    return m2 + (a - 1) * n1
