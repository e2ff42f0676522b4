#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Rank oracle for ZicGdof
Exhaustive check that the weighted outer-bound expression g(r) peaks at a
full-rank transmit covariance for T2 (rank deficit r = 0), with the
weak-interference loss decomposition of g.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from src.core.errors import DecompositionMismatch, RegimeError
from src.core.gdof import AlphaLike, canonicalize, f
from src.core.types import AntennaConfig, Alpha

logger = logging.getLogger("ZicGdof.RankOracle")


@dataclass(frozen=True)
class RankSweep:
    cfg: AntennaConfig
    alpha: Alpha
    values: Tuple[Tuple[int, Fraction], ...]

    @property
    def g0(self) -> Fraction:
        return self.values[0][1]

    @property
    def ties(self) -> Tuple[int, ...]:
        """Rank deficits r > 0 with g(r) = g(0)."""
        return tuple(r for r, g in self.values[1:] if g == self.g0)

    @property
    def violations(self) -> Tuple[int, ...]:
        return tuple(r for r, g in self.values if g > self.g0)

    def is_non_increasing(self) -> bool:
        return all(b[1] <= a[1] for a, b in zip(self.values, self.values[1:]))


@dataclass(frozen=True)
class LossDecomposition:
    """g(r) = x(r) + l3(r) - l2(r) with l3(r) <= l2(r)."""

    x: Fraction
    l2: Fraction
    l3: Fraction
    l2_case: str
    l3_case: str

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.x, self.l2, self.l3))

    @property
    def g(self) -> Fraction:
        return self.x + self.l3 - self.l2


def g_of_r(cfg: AntennaConfig, alpha: AlphaLike, r: int) -> Fraction:
    """Weighted bound when T2's input covariance loses r dimensions of rank.

    Args:
        cfg: antenna configuration; M2 need not be capped
        alpha: interference exponent
        r: rank deficit, 0 <= r <= M2

    Returns:
        Fraction
    """
    if not 0 <= r <= cfg.m2:
        raise ValueError(f"rank deficit r={r} outside [0, {cfg.m2}]")
    a = Alpha.of(alpha).value
    m1, m2, n1, n2 = cfg.m1, cfg.m2, cfg.n1, cfg.n2
    rank = m2 - r
    return (
        f(n1, (1, m1), (a, rank)) / min(m2, n1)
        + f(rank, (a, n1), (1, n2)) / min(m2, n1 + n2)
        - a * Fraction(min(rank, n1), min(m2, n1))
    )


def rank_sweep(cfg: AntennaConfig, alpha: AlphaLike) -> RankSweep:
    alpha = Alpha.of(alpha)
    values = tuple((r, g_of_r(cfg, alpha, r)) for r in range(cfg.m2 + 1))
    return RankSweep(cfg=cfg, alpha=alpha, values=values)


def argmax_g(cfg: AntennaConfig, alpha: AlphaLike) -> Tuple[int, RankSweep]:
    """Smallest maximizing rank deficit and the full sweep over r = 0..M2."""
    sweep = rank_sweep(cfg, alpha)
    best_r, best_g = 0, sweep.values[0][1]
    for r, g in sweep.values:
        if g > best_g:
            best_r, best_g = r, g
    if best_r != 0:
        logger.warning(f"g(r) for {cfg} alpha={sweep.alpha} peaks at r={best_r}")
    return best_r, sweep


def _l2(cfg: AntennaConfig, a: Fraction, r: int) -> Tuple[Fraction, str]:
    m2, n2 = cfg.m2, cfg.n2
    if m2 <= n2:
        return Fraction(r, m2), "M2<=N2"
    if r <= m2 - n2:
        return r * a / m2, "M2>N2, r<=M2-N2"
    return ((m2 - n2) * a + (n2 - (m2 - r))) / m2, "M2>N2, r>M2-N2"


def _l3(cfg: AntennaConfig, a: Fraction, r: int) -> Tuple[Fraction, str]:
    m2, n1 = cfg.m2, cfg.n1
    if m2 <= n1:
        return a * r / m2, "M2<=N1"
    if r <= m2 - n1:
        return Fraction(0), "M2>N1, r<=M2-N1"
    return (n1 - (m2 - r)) * a / n1, "M2>N1, r>M2-N1"


def loss_decomposition(cfg: AntennaConfig, alpha: AlphaLike, r: int) -> LossDecomposition:
    """Split g(r) into x(r) and the losses l2 (second term) and l3 (third term).

    M2 is first capped at N1+N2, which leaves g unchanged once r is shifted
    by the number of switched-off antennas.

    Raises:
        RegimeError: alpha > 1
        DecompositionMismatch: the identity or l3 <= l2 fails
    """
    alpha = Alpha.of(alpha)
    if not alpha.is_weak:
        raise RegimeError(f"loss decomposition needs alpha <= 1, got {alpha}")
    if not 0 <= r <= cfg.m2:
        raise ValueError(f"rank deficit r={r} outside [0, {cfg.m2}]")
    a = alpha.value
    capped = canonicalize(cfg)
    r_capped = max(0, r - (cfg.m2 - capped.m2))

    m1, m2, n1, n2 = capped.m1, capped.m2, capped.n1, capped.n2
    x = (
        f(n1, (1, m1), (a, m2 - r_capped)) / capped.q
        + f(m2, (a, n1), (1, n2)) / capped.p
        - a
    )
    l2, l2_case = _l2(capped, a, r_capped)
    l3, l3_case = _l3(capped, a, r_capped)
    pieces = LossDecomposition(x=x, l2=l2, l3=l3, l2_case=l2_case, l3_case=l3_case)

    g = g_of_r(cfg, alpha, r)
    if pieces.g != g:
        raise DecompositionMismatch(f"{cfg} alpha={alpha} r={r}: x+l3-l2={pieces.g} but g={g}")
    if l3 > l2:
        raise DecompositionMismatch(f"{cfg} alpha={alpha} r={r}: l3={l3} exceeds l2={l2}")
    return pieces
