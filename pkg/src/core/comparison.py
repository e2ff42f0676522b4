#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
CSIT comparisons for ZicGdof
Delayed versus perfect CSIT, GDoF versus DoF, and sum-GDoF series over alpha
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from src.core.achievability import CASE_I, classify_case
from src.core.gdof import (
    AlphaLike,
    delayed_region,
    dof_region_delayed,
    perfect_csit_region,
    perfect_sum_gdof,
    sum_gdof_closed_form,
    tin_region,
)
from src.core.region import Region2D, equals, maximize, subset
from src.core.types import AntennaConfig, Alpha

logger = logging.getLogger("ZicGdof.Comparison")

CSIT_KINDS = ("delayed", "perfect", "dof", "tin")


def region_for(cfg: AntennaConfig, alpha: AlphaLike, csit: str) -> Region2D:
    """Region for one CSIT kind; "dof" ignores alpha."""
    if csit == "delayed":
        return delayed_region(cfg, alpha)
    if csit == "perfect":
        return perfect_csit_region(cfg, alpha)
    if csit == "dof":
        return dof_region_delayed(cfg)
    if csit == "tin":
        return tin_region(cfg, alpha)
    raise ValueError(f"Unknown CSIT kind {csit!r}, expected one of {', '.join(CSIT_KINDS)}")


def delayed_csit_sufficient(cfg: AntennaConfig, alpha: AlphaLike) -> bool:
    """Whether delayed CSIT reaches the perfect-CSIT region.

    True when M2 <= N1, in Case I, or without interference.
    """
    alpha = Alpha.of(alpha)
    if cfg.m2 <= cfg.n1 or alpha.value == 0:
        return True
    return classify_case(cfg, alpha) == CASE_I


def sum_matches_perfect(cfg: AntennaConfig, alpha: AlphaLike) -> bool:
    return sum_gdof_closed_form(cfg, alpha) == perfect_sum_gdof(cfg, alpha)


@dataclass(frozen=True)
class ComparisonVerdict:
    cfg: AntennaConfig
    alpha: Alpha
    regions: Dict[str, Region2D]
    delayed_equals_perfect: bool
    delayed_subset_perfect: bool
    dof_subset_delayed: bool
    delayed_equals_dof: bool
    delayed_sum: Fraction
    perfect_sum: Fraction

    def to_dict(self) -> Dict[str, object]:
        return {
            "delayed_equals_perfect": self.delayed_equals_perfect,
            "delayed_subset_perfect": self.delayed_subset_perfect,
            "dof_subset_delayed": self.dof_subset_delayed,
            "delayed_equals_dof": self.delayed_equals_dof,
            "delayed_sum": f"{self.delayed_sum.numerator}/{self.delayed_sum.denominator}",
            "perfect_sum": f"{self.perfect_sum.numerator}/{self.perfect_sum.denominator}",
        }


def compare_regions(cfg: AntennaConfig, alpha: AlphaLike) -> ComparisonVerdict:
    """Delayed, perfect and DoF regions with their equality/containment verdicts."""
    alpha = Alpha.of(alpha)
    delayed = delayed_region(cfg, alpha)
    perfect = perfect_csit_region(cfg, alpha)
    dof = dof_region_delayed(cfg)
    verdict = ComparisonVerdict(
        cfg=cfg,
        alpha=alpha,
        regions={"delayed": delayed, "perfect": perfect, "dof": dof},
        delayed_equals_perfect=equals(delayed, perfect),
        delayed_subset_perfect=subset(delayed, perfect),
        dof_subset_delayed=subset(dof, delayed),
        delayed_equals_dof=equals(delayed, dof),
        delayed_sum=maximize(delayed, 1, 1)[0],
        perfect_sum=maximize(perfect, 1, 1)[0],
    )
    logger.info(f"Compared regions for {cfg} alpha={alpha}: {verdict.to_dict()}")
    return verdict


@dataclass(frozen=True)
class SumRow:
    alpha: Fraction
    values: Dict[str, Fraction]


def sum_gdof_series(
    cfg: AntennaConfig,
    alphas: Iterable[AlphaLike],
    kinds: Sequence[str] = ("delayed", "perfect"),
) -> List[SumRow]:
    """Sum-GDoF of each CSIT kind along an alpha grid.

    delayed and perfect use their closed forms; dof and tin maximize the region.
    """
    rows = []
    for alpha in alphas:
        alpha = Alpha.of(alpha)
        values = {}
        for kind in kinds:
            if kind == "delayed":
                values[kind] = sum_gdof_closed_form(cfg, alpha)
            elif kind == "perfect":
                values[kind] = perfect_sum_gdof(cfg, alpha)
            else:
                values[kind] = maximize(region_for(cfg, alpha, kind), 1, 1)[0]
        rows.append(SumRow(alpha=alpha.value, values=values))
    return rows


def is_v_shaped(rows: Sequence[SumRow], kind: str = "delayed") -> bool:
    """Non-increasing on alpha in [0, 1] and non-decreasing on [1, inf)."""
    weak = [row.values[kind] for row in rows if row.alpha <= 1]
    strong = [row.values[kind] for row in rows if row.alpha >= 1]
    falling = all(b <= a for a, b in zip(weak, weak[1:]))
    rising = all(b >= a for a, b in zip(strong, strong[1:]))
    return falling and rising


def divergence_intervals(rows: Sequence[SumRow], first: str = "delayed", second: str = "perfect") -> List[List[Fraction]]:
    """Maximal runs of grid points where the two series differ, as [start, end]."""
    runs: List[List[Fraction]] = []
    current: Optional[List[Fraction]] = None
    for row in rows:
        if row.values[first] != row.values[second]:
            if current is None:
                current = [row.alpha, row.alpha]
                runs.append(current)
            else:
                current[1] = row.alpha
        else:
            current = None
    return runs
